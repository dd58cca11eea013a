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
// F_p, F_q = F_p[u]/g(u) and F_{q^n} = F_q[T]/F(T), with polynomials stored
// low degree first and trailing zeros stripped (zero is the empty vector).

#ifndef NECKLACE_FINITE_FIELD_HPP
#define NECKLACE_FINITE_FIELD_HPP

#include "necklace/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace necklace {

class PrimeField {
public:
    using Element = BigCount;

    /// Fails with NotPrime unless p passes a probabilistic primality test.
    explicit PrimeField(BigCount p);

    const BigCount& characteristic() const noexcept { return p_; }
    const BigCount& order() const noexcept { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_integer(const BigCount& v) const;
    bool is_zero(const Element& a) const { return a == 0; }

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element inv(const Element& a) const;

    /// The i-th element in base-p digit order (i < p).
    Element element_at(const BigCount& i) const { return from_integer(i); }
    BigCount index_of(const Element& a) const { return a; }

private:
    BigCount p_;
};

template <class F>
using Poly = std::vector<typename F::Element>;

template <class F>
void trim(const F& f, Poly<F>& a) {
    while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

/// Degree, with -1 standing for the zero polynomial.
template <class F>
long degree(const Poly<F>& a) {
    return static_cast<long>(a.size()) - 1;
}

template <class F>
Poly<F> poly_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> out(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
    trim(f, out);
    return out;
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> out(std::max(a.size(), b.size()), f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
    trim(f, out);
    return out;
}

template <class F>
Poly<F> poly_scale(const F& f, const Poly<F>& a, const typename F::Element& c) {
    Poly<F> out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(f.mul(x, c));
    trim(f, out);
    return out;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<F> out(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (f.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    trim(f, out);
    return out;
}

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    Poly<F> r = a;
    if (r.size() < b.size()) return {{}, r};
    Poly<F> quot(r.size() - b.size() + 1, f.zero());
    const auto lead_inv = f.inv(b.back());
    for (std::size_t k = r.size(); k-- >= b.size();) {
        if (f.is_zero(r[k])) continue;
        const auto c = f.mul(r[k], lead_inv);
        const std::size_t shift = k + 1 - b.size();
        quot[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
    }
    trim(f, quot);
    trim(f, r);
    return {quot, r};
}

template <class F>
Poly<F> poly_mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(f, a, b).second;
}

template <class F>
Poly<F> make_monic(const F& f, const Poly<F>& a) {
    if (a.empty()) return a;
    return poly_scale(f, a, f.inv(a.back()));
}

template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
    while (!b.empty()) {
        Poly<F> r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, a);
}

template <class F>
Poly<F> poly_powmod(const F& f, const Poly<F>& base, const BigCount& e, const Poly<F>& m) {
    Poly<F> result{f.one()};
    result = poly_mod(f, result, m);
    Poly<F> b = poly_mod(f, base, m);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mod(f, poly_mul(f, result, result), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mod(f, poly_mul(f, result, b), m);
    }
    return result;
}

template <class F>
typename F::Element poly_eval(const F& f, const Poly<F>& a, const typename F::Element& x) {
    auto acc = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

/// Distinct prime factors of m by trial division (m is a small degree).
std::vector<std::size_t> small_prime_factors(std::size_t m);

/// Rabin's test: f monic of degree d >= 1 is irreducible over F (order Q) iff
/// T^(Q^d) = T mod f and gcd(T^(Q^(d/r)) - T, f) = 1 for every prime r | d.
template <class F>
bool is_irreducible(const F& f, const Poly<F>& poly) {
    const long d = degree<F>(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly<F> x{f.zero(), f.one()};
    auto frob_iter = [&](std::size_t k) {
        Poly<F> r = x;
        for (std::size_t i = 0; i < k; ++i) r = poly_powmod(f, r, f.order(), poly);
        return r;
    };
    if (poly_sub(f, frob_iter(static_cast<std::size_t>(d)), x) != Poly<F>{}) return false;
    for (std::size_t r : small_prime_factors(static_cast<std::size_t>(d))) {
        const Poly<F> h = poly_sub(f, frob_iter(static_cast<std::size_t>(d) / r), x);
        const Poly<F> g = poly_gcd(f, h, poly);
        if (g.size() != 1) return false;
    }
    return true;
}

/// Base[T]/(modulus) for a monic irreducible modulus.
template <class Base>
class ExtensionField {
public:
    using Element = Poly<Base>;
    using BaseElement = typename Base::Element;

    ExtensionField(Base base, Poly<Base> modulus) : base_(std::move(base)), modulus_(std::move(modulus)) {
        trim(base_, modulus_);
        if (modulus_.size() < 2) fail(ErrorCode::InvalidArgument, "extension modulus must have degree >= 1");
        if (!(modulus_.back() == base_.one())) fail(ErrorCode::InvalidArgument, "extension modulus must be monic");
        order_ = power(base_.order(), static_cast<unsigned long>(degree()));
    }

    const Base& base() const noexcept { return base_; }
    const Poly<Base>& modulus() const noexcept { return modulus_; }
    std::size_t degree() const noexcept { return modulus_.size() - 1; }
    const BigCount& order() const noexcept { return order_; }
    const BigCount& characteristic() const noexcept { return base_.characteristic(); }

    Element zero() const { return {}; }
    Element one() const { return reduce({base_.one()}); }
    Element embed(const BaseElement& c) const { return reduce({c}); }
    /// The class of T.
    Element generator() const { return reduce({base_.zero(), base_.one()}); }
    bool is_zero(const Element& a) const { return a.empty(); }

    Element reduce(Element a) const {
        trim(base_, a);
        return poly_mod(base_, a, modulus_);
    }
    Element add(const Element& a, const Element& b) const { return poly_add(base_, a, b); }
    Element sub(const Element& a, const Element& b) const { return poly_sub(base_, a, b); }
    Element neg(const Element& a) const { return poly_sub(base_, Element{}, a); }
    Element mul(const Element& a, const Element& b) const { return poly_mod(base_, poly_mul(base_, a, b), modulus_); }
    Element scale(const Element& a, const BaseElement& c) const { return poly_scale(base_, a, c); }

    Element inv(const Element& a) const {
        if (a.empty()) fail(ErrorCode::DivisionByZero, "inverse of zero");
        // Extended Euclid on (modulus, a), tracking the coefficient of a.
        Element r0 = modulus_, r1 = a, s0{}, s1 = one();
        while (!r1.empty()) {
            auto [q, r] = poly_divmod(base_, r0, r1);
            Element s = poly_sub(base_, s0, poly_mul(base_, q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.size() != 1) fail(ErrorCode::Internal, "modulus is not irreducible");
        return reduce(poly_scale(base_, s0, base_.inv(r0[0])));
    }

    Element pow(const Element& a, const BigCount& e) const {
        if (e < 0) return pow(inv(a), -e);
        Element result = one();
        const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = mul(result, result);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
        }
        return result;
    }

    Element frobenius(const Element& a) const { return pow(a, base_.order()); }

    /// The constant coefficient when a lies in the base field.
    std::optional<BaseElement> project(const Element& a) const {
        if (a.empty()) return base_.zero();
        if (a.size() == 1) return a[0];
        return std::nullopt;
    }

    /// Dense coordinates over the base field, length degree().
    std::vector<BaseElement> coordinates(const Element& a) const {
        std::vector<BaseElement> out(degree(), base_.zero());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
        return out;
    }
    Element from_coordinates(std::vector<BaseElement> c) const { return reduce(std::move(c)); }

    /// Elements enumerated by base-|Base| digits of i, lowest coordinate least significant.
    Element element_at(BigCount i) const {
        Element out;
        for (std::size_t k = 0; k < degree(); ++k) {
            BigCount digit;
            mpz_fdiv_qr(i.get_mpz_t(), digit.get_mpz_t(), i.get_mpz_t(), base_.order().get_mpz_t());
            out.push_back(base_.element_at(digit));
        }
        trim(base_, out);
        return out;
    }
    BigCount index_of(const Element& a) const {
        BigCount v = 0;
        for (std::size_t k = a.size(); k-- > 0;) v = v * base_.order() + base_.index_of(a[k]);
        return v;
    }

private:
    Base base_;
    Poly<Base> modulus_;
    BigCount order_;
};

using Fq = ExtensionField<PrimeField>;
using Fqn = ExtensionField<Fq>;
using FqElement = Fq::Element;
using FqnElement = Fqn::Element;
using FqPoly = Poly<Fq>;

/// Minimal polynomial of a over the base field, the product of (T - a^(Q^i)) over
/// the degree() conjugates. Fails with ConjugatesCollide when they repeat.
FqPoly minimal_polynomial(const Fqn& field, const FqnElement& a);

/// Prime factors of m (with multiplicity, ascending) by trial division and
/// Pollard-Brent rho; fails with TooBig past desk scale.
std::vector<BigCount> factorize(const BigCount& m);

/// Fails with BadFactorization unless the factors are primes dividing m that cover
/// every prime factor of m; repeats are allowed but not required.
void check_factorization(const BigCount& m, const std::vector<BigCount>& factors);

/// a has multiplicative order exactly Q^n - 1 in the given field.
bool is_primitive_element(const Fqn& field, const FqnElement& a, const std::vector<BigCount>& factors);

/// Text forms: an F_q element is its comma-separated F_p coordinate vector (e entries);
/// an F_q polynomial or F_{q^n} element is a space-separated list of those.
std::string format_fq(const Fq& fq, const FqElement& a);
FqElement parse_fq(const Fq& fq, const std::string& text);
std::string format_fq_poly(const Fq& fq, const FqPoly& a);
std::string format_fqn(const Fqn& field, const FqnElement& a);
FqnElement parse_fqn(const Fqn& field, const std::string& text);

/// F_q from p and the modulus g (low-first, monic, degree e); g = u when e = 1.
Fq make_fq(const BigCount& p, std::vector<BigCount> g);

/// Everything the irreducible indexer and BCH matrices need: F_q, F_{q^n} and
/// whether the class of T is certified primitive.
class FieldContext {
public:
    FieldContext(Fq fq, FqPoly modulus, std::vector<BigCount> factors);

    const Fq& fq() const noexcept { return fq_; }
    const Fqn& fqn() const noexcept { return fqn_; }
    const BigCount& q() const noexcept { return fq_.order(); }
    std::size_t n() const noexcept { return fqn_.degree(); }
    const std::vector<BigCount>& factors() const noexcept { return factors_; }
    bool primitive() const noexcept { return primitive_; }
    /// The class g of T in F_{q^n}.
    FqnElement g() const { return fqn_.generator(); }

private:
    Fq fq_;
    Fqn fqn_;
    std::vector<BigCount> factors_;
    bool primitive_ = false;
};

/// Parsed advice file; see the README for the line format.
struct Advice {
    BigCount p;
    std::size_t e = 1;
    std::vector<BigCount> g;  // low-first with the leading 1; empty when e = 1
    std::size_t n = 1;
    std::vector<std::vector<BigCount>> F;  // n+1 coefficients, each e F_p entries
    std::vector<BigCount> factors;       // prime factors of q^n - 1, possibly empty
};

/// Fails with InvalidAdvice on malformed text.
Advice parse_advice(const std::string& text);
std::string format_advice(const Advice& advice);

/// Validates the advice (g and F irreducible, factors consistent). When no factors
/// are given they are computed at desk scale; primitivity is checked either way.
/// Fails with InvalidAdvice on any inconsistency.
FieldContext load_context(const Advice& advice);
Advice to_advice(const FieldContext& ctx);

/// Random monic irreducible F of degree n over F_q whose root is primitive,
/// deterministic in `seed`.
FieldContext find_primitive_polynomial(const Fq& fq, std::size_t n, const std::vector<BigCount>& factors,
                                       unsigned long seed);

/// F_q for q = p^e with a random irreducible g when e > 1 (deterministic in seed).
Fq generate_fq(const BigCount& p, std::size_t e, unsigned long seed);

}  // namespace necklace

#endif  // NECKLACE_FINITE_FIELD_HPP
