/* Copyright 2026 The necklace Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include "necklace/finite_field.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace necklace;

namespace {

// Polynomial over a prime field from low-first small coefficients.
FqPoly prime_poly(const Fq& fq, std::initializer_list<int> coeffs) {
    FqPoly out;
    for (int c : coeffs) out.push_back(c == 0 ? FqElement{} : FqElement{BigCount(c)});
    trim(fq, out);
    return out;
}

FieldContext context(const Fq& fq, const FqPoly& F) {
    return FieldContext(fq, F, factorize(power(fq.order(), static_cast<unsigned long>(degree<Fq>(F))) - 1));
}

FqnElement random_element(const Fqn& field, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> pick(0, 1u << 30);
    return field.element_at(BigCount(pick(rng)) % field.order());
}

}  // namespace

TEST_SUITE("finite_field") {

TEST_CASE("prime field arithmetic") {
    const PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(3) == 4);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK_THROWS_AS(f.inv(0), Error);
    CHECK_THROWS_AS(PrimeField(9), Error);
}

TEST_CASE("F_4 examples") {
    const Fq f2 = make_fq(2, {});
    const FieldContext ctx = context(f2, prime_poly(f2, {1, 1, 1}));
    const Fqn& f4 = ctx.fqn();
    const FqnElement u = ctx.g();
    const FqnElement u1 = f4.add(u, f4.one());
    CHECK(f4.mul(u, u1) == f4.one());
    CHECK(f4.frobenius(u) == u1);
    CHECK(minimal_polynomial(f4, u) == prime_poly(f2, {1, 1, 1}));
    CHECK(ctx.primitive());
    CHECK(f4.pow(u, 0) == f4.one());
    CHECK(f4.pow(u, 3) == f4.one());
    CHECK(format_fqn(f4, u1) == "1 1");
}

TEST_CASE("F_8 examples") {
    const Fq f2 = make_fq(2, {});
    const FqPoly F = prime_poly(f2, {1, 1, 0, 1});
    const FieldContext ctx = context(f2, F);
    CHECK(minimal_polynomial(ctx.fqn(), ctx.g()) == F);
    for (unsigned long i = 1; i < 8; ++i) {
        const FqnElement a = ctx.fqn().element_at(i);
        CHECK(ctx.fqn().pow(a, 7) == ctx.fqn().one());
        FqnElement x = a;
        for (int k = 0; k < 3; ++k) x = ctx.fqn().frobenius(x);
        CHECK(x == a);
    }
    CHECK_THROWS_AS(minimal_polynomial(ctx.fqn(), ctx.fqn().one()), Error);
}

TEST_CASE("degree one minimal polynomials") {
    const Fq f5 = make_fq(5, {});
    const FieldContext ctx = context(f5, prime_poly(f5, {3, 1}));
    for (unsigned long a = 0; a < 5; ++a) {
        const FqnElement alpha = ctx.fqn().element_at(a);
        const FqPoly m = minimal_polynomial(ctx.fqn(), alpha);
        REQUIRE(m.size() == 2);
        CHECK(f5.add(m[0], alpha.empty() ? FqElement{} : alpha[0]).empty());
    }
}

TEST_CASE("irreducibility examples") {
    const Fq f2 = make_fq(2, {});
    const Fq f3 = make_fq(3, {});
    CHECK_FALSE(is_irreducible(f2, prime_poly(f2, {1, 0, 1})));
    CHECK(is_irreducible(f2, prime_poly(f2, {1, 1, 1})));
    CHECK(is_irreducible(f3, prime_poly(f3, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(f3, prime_poly(f3, {2, 0, 1})));
}

TEST_CASE("primitive polynomial search examples") {
    const Fq f2 = make_fq(2, {});
    CHECK(find_primitive_polynomial(f2, 2, {3}, 1).fqn().modulus() == prime_poly(f2, {1, 1, 1}));
    for (unsigned long seed = 1; seed <= 6; ++seed) {
        const FqPoly F = find_primitive_polynomial(f2, 3, {7}, seed).fqn().modulus();
        CHECK((F == prime_poly(f2, {1, 1, 0, 1}) || F == prime_poly(f2, {1, 0, 1, 1})));
    }
    const Fq f3 = make_fq(3, {});
    CHECK(find_primitive_polynomial(f3, 1, {2}, 1).fqn().modulus() == prime_poly(f3, {1, 1}));
    CHECK_THROWS_AS(find_primitive_polynomial(f2, 4, {3, 7}, 1), Error);
    CHECK_THROWS_AS(find_primitive_polynomial(f2, 4, {15}, 1), Error);
}

TEST_CASE("field axioms and Frobenius on random elements") {
    std::mt19937_64 rng(71);
    struct Shape { unsigned long p; std::size_t e, n; };
    for (Shape s : {Shape{2, 1, 5}, Shape{3, 2, 3}, Shape{5, 1, 4}, Shape{7, 3, 2}, Shape{101, 1, 3}}) {
        const Fq fq = generate_fq(s.p, s.e, 3);
        const BigCount q = fq.order();
        const FieldContext ctx = find_primitive_polynomial(fq, s.n, factorize(power(q, s.n) - 1), 5);
        const Fqn& f = ctx.fqn();
        for (int trial = 0; trial < 25; ++trial) {
            const auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.add(a, f.neg(a)) == f.zero());
            CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
            CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
            CHECK(f.index_of(a) < f.order());
            CHECK(f.element_at(f.index_of(a)) == a);
            if (!f.is_zero(a)) {
                CHECK(f.mul(a, f.inv(a)) == f.one());
                CHECK(f.pow(a, f.order() - 1) == f.one());
            }
            FqnElement x = a;
            for (std::size_t k = 0; k < s.n; ++k) x = f.frobenius(x);
            CHECK(x == a);
            CHECK(parse_fqn(f, format_fqn(f, a)) == a);
        }
    }
}

TEST_CASE("minimal polynomials vanish on every conjugate") {
    std::mt19937_64 rng(72);
    const Fq fq = generate_fq(3, 2, 1);
    const FieldContext ctx = find_primitive_polynomial(fq, 3, factorize(power(9, 3) - 1), 2);
    const Fqn& f = ctx.fqn();
    for (int trial = 0; trial < 40; ++trial) {
        const FqnElement a = random_element(f, rng);
        FqPoly m;
        try {
            m = minimal_polynomial(f, a);
        } catch (const Error& err) {
            CHECK(err.code() == ErrorCode::ConjugatesCollide);
            CHECK(f.pow(a, 9) == a);
            continue;
        }
        CHECK(is_irreducible(fq, m));
        CHECK(m.back() == fq.one());
        Poly<Fqn> lifted;
        for (const auto& c : m) lifted.push_back(f.embed(c));
        FqnElement x = a;
        for (int k = 0; k < 3; ++k) {
            CHECK(f.is_zero(poly_eval(f, lifted, x)));
            x = f.frobenius(x);
        }
    }
}

TEST_CASE("primitive element certification by exhaustion") {
    const Fq f2 = make_fq(2, {});
    for (std::size_t n : {4u, 7u, 10u, 12u}) {
        const BigCount m = power(2, n) - 1;
        const FieldContext ctx = find_primitive_polynomial(f2, n, factorize(m), 9);
        std::set<BigCount> seen;
        FqnElement x = ctx.fqn().one();
        for (BigCount i = 0; i < m; ++i) {
            seen.insert(ctx.fqn().index_of(x));
            x = ctx.fqn().mul(x, ctx.g());
        }
        CHECK(BigCount(seen.size()) == m);
        CHECK(x == ctx.fqn().one());
    }
    const Fq f3 = make_fq(3, {});
    const FieldContext ctx = context(f3, prime_poly(f3, {1, 0, 1}));
    CHECK_FALSE(ctx.primitive());
}

TEST_CASE("factorization") {
    CHECK(factorize(1).empty());
    CHECK(factorize(360) == std::vector<BigCount>{2, 2, 2, 3, 3, 5});
    CHECK(factorize(power(2, 64) - 1) == std::vector<BigCount>{3, 5, 17, 257, 641, 65537, 6700417});
    const BigCount big_prime = power(2, 61) - 1;
    CHECK(factorize(big_prime * 1000003) == std::vector<BigCount>{1000003, big_prime});
    CHECK_NOTHROW(check_factorization(360, {2, 2, 2, 3, 3, 5}));
    CHECK_NOTHROW(check_factorization(360, {2, 3, 5}));
    CHECK_THROWS_AS(check_factorization(360, {2, 3}), Error);
    CHECK_THROWS_AS(check_factorization(360, {2, 3, 5, 6}), Error);
    CHECK_THROWS_AS(check_factorization(360, {2, 3, 5, 7}), Error);
}

TEST_CASE("advice text round trip") {
    const Fq f4 = make_fq(2, {1, 1, 1});
    const FieldContext ctx = find_primitive_polynomial(f4, 3, factorize(63), 4);
    const Advice adv = to_advice(ctx);
    CHECK(adv.e == 2);
    const std::string text = format_advice(adv);
    const FieldContext back = load_context(parse_advice(text));
    CHECK(back.fqn().modulus() == ctx.fqn().modulus());
    CHECK(back.fq().modulus() == ctx.fq().modulus());
    CHECK(format_advice(to_advice(back)) == text);
}

TEST_CASE("advice rejection") {
    const auto rejects = [](const std::string& text) {
        try {
            load_context(parse_advice(text));
        } catch (const Error& err) {
            return err.code() == ErrorCode::InvalidAdvice;
        }
        return false;
    };
    CHECK_NOTHROW(load_context(parse_advice("2 1\n3\n1 1 0 1\n")));
    CHECK(rejects("2 1\n3\n1 0 0 1\n"));
    CHECK(rejects("2 1\n4\n1 1 1 1 1\n"));
    CHECK(rejects("4 1\n2\n1 1 1\n"));
    CHECK(rejects("2 1\n3\n1 1 0 1\nfactors 3\n"));
    CHECK(rejects("2 1\n3\n1 1 0\n"));
    CHECK(rejects("2 2\n1 0 1\n2\n0 1 1\n"));
    CHECK(rejects("garbage"));
}

}  // TEST_SUITE
