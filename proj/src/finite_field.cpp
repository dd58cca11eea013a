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

#include <algorithm>
#include <sstream>

namespace necklace {

namespace {

constexpr int kPrimeReps = 40;
constexpr unsigned long kTrialLimit = 100000;
// Pollard-Brent is only asked to split cofactors up to this many bits.
constexpr std::size_t kFactorBitLimit = 160;

bool probable_prime(const BigCount& v) { return mpz_probab_prime_p(v.get_mpz_t(), kPrimeReps) > 0; }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

BigCount parse_advice_number(const std::string& text) {
    try {
        return parse_decimal(text);
    } catch (const Error&) {
        fail(ErrorCode::InvalidAdvice, "bad number '" + text + "' in advice");
    }
}

// One nontrivial factor of odd composite m.
BigCount pollard_brent(const BigCount& m, unsigned long seed) {
    BigCount y = 2 + seed, c = 1 + seed, g = 1, r = 1, q = 1, x, ys;
    const unsigned long batch = 128;
    auto f = [&](const BigCount& v) {
        BigCount out = v * v + c;
        mpz_mod(out.get_mpz_t(), out.get_mpz_t(), m.get_mpz_t());
        return out;
    };
    while (g == 1) {
        x = y;
        for (BigCount i = 0; i < r; ++i) y = f(y);
        BigCount k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < batch && k + i < r; ++i) {
                y = f(y);
                BigCount diff = x - y;
                mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                q = q * diff;
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), m.get_mpz_t());
            k += batch;
        }
        r *= 2;
        if (r > BigCount(1) << 40) fail(ErrorCode::TooBig, "factorization did not converge");
    }
    if (g == m) {
        do {
            ys = f(ys);
            BigCount diff = x - ys;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_composite(const BigCount& m, std::vector<BigCount>& out) {
    if (m == 1) return;
    if (probable_prime(m)) {
        out.push_back(m);
        return;
    }
    if (mpz_sizeinbase(m.get_mpz_t(), 2) > kFactorBitLimit) {
        fail(ErrorCode::TooBig, "cofactor " + to_decimal(m) + " is too large to factor; supply factors");
    }
    BigCount d = m;
    for (unsigned long seed = 0; d == m; ++seed) d = pollard_brent(m, seed);
    split_composite(d, out);
    split_composite(m / d, out);
}

std::vector<BigCount> distinct(std::vector<BigCount> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

FqElement random_fq(const Fq& fq, gmp_randclass& rng) {
    FqElement out;
    for (std::size_t i = 0; i < fq.degree(); ++i) out.push_back(rng.get_z_range(fq.characteristic()));
    trim(fq.base(), out);
    return out;
}

std::vector<BigCount> fp_coords(const Fq& fq, const FqElement& a) { return fq.coordinates(a); }

}  // namespace

PrimeField::PrimeField(BigCount p) : p_(std::move(p)) {
    if (p_ < 2 || !probable_prime(p_)) fail(ErrorCode::NotPrime, to_decimal(p_) + " is not prime");
}

PrimeField::Element PrimeField::from_integer(const BigCount& v) const {
    BigCount out;
    mpz_mod(out.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return out;
}

PrimeField::Element PrimeField::add(const Element& a, const Element& b) const {
    BigCount out = a + b;
    if (out >= p_) out -= p_;
    return out;
}

PrimeField::Element PrimeField::sub(const Element& a, const Element& b) const {
    BigCount out = a - b;
    if (out < 0) out += p_;
    return out;
}

PrimeField::Element PrimeField::neg(const Element& a) const { return a == 0 ? BigCount(0) : BigCount(p_ - a); }

PrimeField::Element PrimeField::mul(const Element& a, const Element& b) const {
    BigCount out = a * b;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), p_.get_mpz_t());
    return out;
}

PrimeField::Element PrimeField::inv(const Element& a) const {
    if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    BigCount out;
    mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
    return out;
}

std::vector<std::size_t> small_prime_factors(std::size_t m) {
    std::vector<std::size_t> out;
    for (std::size_t r = 2; r * r <= m; ++r) {
        if (m % r != 0) continue;
        out.push_back(r);
        while (m % r == 0) m /= r;
    }
    if (m > 1) out.push_back(m);
    return out;
}

FqPoly minimal_polynomial(const Fqn& field, const FqnElement& a) {
    const std::size_t n = field.degree();
    std::vector<FqnElement> conj{a};
    for (std::size_t i = 1; i < n; ++i) conj.push_back(field.frobenius(conj.back()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (conj[i] == conj[j]) fail(ErrorCode::ConjugatesCollide, "element lies in a proper subfield");
        }
    }
    Poly<Fqn> prod{field.one()};
    for (const auto& c : conj) prod = poly_mul(field, prod, Poly<Fqn>{field.neg(c), field.one()});
    FqPoly out;
    for (const auto& coeff : prod) {
        auto base = field.project(coeff);
        if (!base) fail(ErrorCode::CoefficientNotInBase, "minimal polynomial coefficient outside F_q");
        out.push_back(*base);
    }
    trim(field.base(), out);
    return out;
}

std::vector<BigCount> factorize(const BigCount& m) {
    if (m < 1) fail(ErrorCode::InvalidArgument, "can only factor positive integers");
    std::vector<BigCount> out;
    BigCount rest = m;
    for (unsigned long d = 2; d <= kTrialLimit && BigCount(d) * d <= rest; ++d) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            out.emplace_back(d);
            rest /= d;
        }
    }
    split_composite(rest, out);
    std::sort(out.begin(), out.end());
    return out;
}

void check_factorization(const BigCount& m, const std::vector<BigCount>& factors) {
    BigCount rest = m;
    for (const auto& r : factors) {
        if (r < 2 || !probable_prime(r)) fail(ErrorCode::BadFactorization, to_decimal(r) + " is not prime");
        if (m % r != 0) fail(ErrorCode::BadFactorization, to_decimal(r) + " does not divide " + to_decimal(m));
        while (rest % r == 0) rest /= r;
    }
    if (rest != 1) fail(ErrorCode::BadFactorization, "factors miss part of " + to_decimal(m));
}

bool is_primitive_element(const Fqn& field, const FqnElement& a, const std::vector<BigCount>& factors) {
    if (a.empty()) return false;
    const BigCount order = field.order() - 1;
    if (field.pow(a, order) != field.one()) return false;
    for (const auto& r : distinct(factors)) {
        if (field.pow(a, order / r) == field.one()) return false;
    }
    return true;
}

std::string format_fq(const Fq& fq, const FqElement& a) {
    std::string out;
    const auto coords = fp_coords(fq, a);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ',';
        out += to_decimal(coords[i]);
    }
    return out;
}

FqElement parse_fq(const Fq& fq, const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() > fq.degree()) fail(ErrorCode::InvalidArgument, "too many coordinates in '" + text + "'");
    FqElement out;
    for (const auto& part : parts) {
        BigCount v = parse_decimal(part);
        if (v >= fq.characteristic()) fail(ErrorCode::InvalidArgument, "coordinate " + part + " is not below p");
        out.push_back(v);
    }
    trim(fq.base(), out);
    return out;
}

std::string format_fq_poly(const Fq& fq, const FqPoly& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ' ';
        out += format_fq(fq, a[i]);
    }
    return out;
}

std::string format_fqn(const Fqn& field, const FqnElement& a) {
    std::string out;
    const auto coords = field.coordinates(a);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ' ';
        out += format_fq(field.base(), coords[i]);
    }
    return out;
}

FqnElement parse_fqn(const Fqn& field, const std::string& text) {
    const auto parts = tokens(text);
    if (parts.size() > field.degree()) fail(ErrorCode::InvalidArgument, "too many coordinates");
    std::vector<FqElement> coords;
    for (const auto& part : parts) coords.push_back(parse_fq(field.base(), part));
    return field.from_coordinates(std::move(coords));
}

Fq make_fq(const BigCount& p, std::vector<BigCount> g) {
    PrimeField fp(p);
    if (g.empty()) g = {0, 1};
    for (auto& c : g) {
        if (c < 0 || c >= p) fail(ErrorCode::InvalidAdvice, "coefficient of g is not below p");
    }
    trim(fp, g);
    if (g.size() < 2 || g.back() != 1) fail(ErrorCode::InvalidAdvice, "g must be monic of degree >= 1");
    if (!is_irreducible(fp, g)) fail(ErrorCode::InvalidAdvice, "g is not irreducible over F_p");
    return Fq(fp, std::move(g));
}

FieldContext::FieldContext(Fq fq, FqPoly modulus, std::vector<BigCount> factors)
    : fq_(fq), fqn_(fq, std::move(modulus)), factors_(std::move(factors)) {
    primitive_ = is_primitive_element(fqn_, fqn_.generator(), factors_);
}

Advice parse_advice(const std::string& text) {
    std::vector<std::string> lines;
    for (auto& line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!tokens(line).empty()) lines.push_back(line);
    }
    Advice adv;
    std::size_t at = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (at >= lines.size()) fail(ErrorCode::InvalidAdvice, std::string("advice is missing ") + what);
        return lines[at++];
    };
    const auto head = tokens(need("the 'p e' line"));
    if (head.size() != 2) fail(ErrorCode::InvalidAdvice, "first line must be 'p e'");
    adv.p = parse_advice_number(head[0]);
    const BigCount e = parse_advice_number(head[1]);
    if (e < 1 || e > 1u << 16) fail(ErrorCode::InvalidAdvice, "e out of range");
    adv.e = e.get_ui();
    if (adv.e > 1) {
        for (const auto& tok : tokens(need("the coefficients of g"))) adv.g.push_back(parse_advice_number(tok));
        if (adv.g.size() != adv.e + 1) fail(ErrorCode::InvalidAdvice, "g must have e+1 coefficients");
    }
    const auto nline = tokens(need("the 'n' line"));
    if (nline.size() != 1) fail(ErrorCode::InvalidAdvice, "third line must be 'n'");
    const BigCount n = parse_advice_number(nline[0]);
    if (n < 1 || n > 1u << 16) fail(ErrorCode::InvalidAdvice, "n out of range");
    adv.n = n.get_ui();
    for (const auto& tok : tokens(need("the coefficients of F"))) {
        std::vector<BigCount> coeff;
        for (const auto& part : split(tok, ',')) coeff.push_back(parse_advice_number(part));
        if (coeff.size() > adv.e) fail(ErrorCode::InvalidAdvice, "F coefficient has more than e entries");
        adv.F.push_back(std::move(coeff));
    }
    if (adv.F.size() != adv.n + 1) fail(ErrorCode::InvalidAdvice, "F must have n+1 coefficients");
    if (at < lines.size()) {
        const auto fac = tokens(lines[at++]);
        if (fac.empty() || fac[0] != "factors") fail(ErrorCode::InvalidAdvice, "fifth line must start with 'factors'");
        for (std::size_t i = 1; i < fac.size(); ++i) adv.factors.push_back(parse_advice_number(fac[i]));
    }
    if (at < lines.size()) fail(ErrorCode::InvalidAdvice, "trailing lines in advice");
    return adv;
}

std::string format_advice(const Advice& adv) {
    std::ostringstream out;
    out << to_decimal(adv.p) << ' ' << adv.e << '\n';
    if (adv.e > 1) {
        for (std::size_t i = 0; i < adv.g.size(); ++i) out << (i ? " " : "") << to_decimal(adv.g[i]);
        out << '\n';
    }
    out << adv.n << '\n';
    for (std::size_t i = 0; i < adv.F.size(); ++i) {
        if (i) out << ' ';
        for (std::size_t k = 0; k < adv.F[i].size(); ++k) out << (k ? "," : "") << to_decimal(adv.F[i][k]);
    }
    out << '\n';
    if (!adv.factors.empty()) {
        out << "factors";
        for (const auto& r : adv.factors) out << ' ' << to_decimal(r);
        out << '\n';
    }
    return out.str();
}

FieldContext load_context(const Advice& adv) {
    Fq fq = [&] {
        try {
            return make_fq(adv.p, adv.g);
        } catch (const Error& err) {
            if (err.code() == ErrorCode::NotPrime) fail(ErrorCode::InvalidAdvice, err.what());
            throw;
        }
    }();
    FqPoly F;
    for (const auto& coeff : adv.F) {
        FqElement c;
        for (const auto& v : coeff) {
            if (v >= adv.p) fail(ErrorCode::InvalidAdvice, "coefficient of F is not below p");
            c.push_back(v);
        }
        trim(fq.base(), c);
        F.push_back(std::move(c));
    }
    trim(fq, F);
    if (F.size() != adv.n + 1 || F.back() != fq.one()) fail(ErrorCode::InvalidAdvice, "F must be monic of degree n");
    if (!is_irreducible(fq, F)) fail(ErrorCode::InvalidAdvice, "F is not irreducible over F_q");
    const BigCount m = fq.order() == 0 ? BigCount(0) : BigCount(power(fq.order(), adv.n) - 1);
    std::vector<BigCount> factors = adv.factors;
    if (factors.empty()) {
        try {
            factors = factorize(m);
        } catch (const Error& err) {
            fail(ErrorCode::InvalidAdvice, std::string("cannot certify primitivity: ") + err.what());
        }
    } else {
        try {
            check_factorization(m, factors);
        } catch (const Error& err) {
            fail(ErrorCode::InvalidAdvice, err.what());
        }
        std::sort(factors.begin(), factors.end());
    }
    FieldContext ctx(std::move(fq), std::move(F), std::move(factors));
    if (!ctx.primitive()) fail(ErrorCode::InvalidAdvice, "the root of F is not primitive");
    return ctx;
}

Advice to_advice(const FieldContext& ctx) {
    Advice adv;
    const Fq& fq = ctx.fq();
    adv.p = fq.characteristic();
    adv.e = fq.degree();
    if (adv.e > 1) adv.g = fq.modulus();
    adv.n = ctx.n();
    for (const auto& c : ctx.fqn().modulus()) adv.F.push_back(fp_coords(fq, c));
    adv.factors = ctx.factors();
    return adv;
}

FieldContext find_primitive_polynomial(const Fq& fq, std::size_t n, const std::vector<BigCount>& factors,
                                       unsigned long seed) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    const BigCount m = power(fq.order(), n) - 1;
    check_factorization(m, factors);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    // Density of primitive polynomials is about phi(m)/(n m), so this always ends.
    for (;;) {
        FqPoly F;
        for (std::size_t i = 0; i < n; ++i) F.push_back(random_fq(fq, rng));
        F.push_back(fq.one());
        if (F[0].empty() && n > 1) continue;
        if (!is_irreducible(fq, F)) continue;
        FieldContext ctx(fq, F, factors);
        if (ctx.primitive()) return ctx;
    }
}

Fq generate_fq(const BigCount& p, std::size_t e, unsigned long seed) {
    if (e == 0) fail(ErrorCode::InvalidArgument, "e must be positive");
    PrimeField fp(p);
    if (e == 1) return Fq(fp, {0, 1});
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    for (;;) {
        std::vector<BigCount> g;
        for (std::size_t i = 0; i < e; ++i) g.push_back(rng.get_z_range(p));
        g.push_back(1);
        if (is_irreducible(fp, g)) return Fq(fp, std::move(g));
    }
}

}  // namespace necklace
