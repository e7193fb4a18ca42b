#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "superyang/errors.hpp"
#include "superyang/rational.hpp"

namespace superyang {

template <class R>
class Poly;

/// Zero/one/is_zero for the coefficient rings Poly is instantiated with.
template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return sgn(r) == 0; }
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct ScalarTraits<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_zero(const Int& z) { return sgn(z) == 0; }
    static Int from_rational(const Rational& r) {
        if (r.get_den() != 1) throw DomainError("non-integer rational in integer context");
        return r.get_num();
    }
};

template <class R>
struct ScalarTraits<Poly<R>> {
    static Poly<R> zero() { return Poly<R>(); }
    static Poly<R> one() { return Poly<R>(ScalarTraits<R>::one()); }
    static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
    static Poly<R> from_rational(const Rational& r) {
        return Poly<R>(ScalarTraits<R>::from_rational(r));
    }
};

/// Dense univariate polynomial with ascending coefficients over a commutative
/// ring R. Invariant: the coefficient vector carries no trailing zero, so the
/// zero polynomial is the empty vector and equality is vector equality.
template <class R>
class Poly {
public:
    Poly() = default;
    explicit Poly(R constant) {
        if (!ScalarTraits<R>::is_zero(constant)) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() {
        return Poly(std::vector<R>{ScalarTraits<R>::zero(), ScalarTraits<R>::one()});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && is_unit_coeff(c_[0]); }

    /// Coefficient of x^k (zero beyond the degree).
    R coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return ScalarTraits<R>::zero();
        return c_[k];
    }
    const std::vector<R>& coeffs() const { return c_; }

    /// Leading coefficient; DomainError on the zero polynomial.
    const R& lc() const {
        if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> out(std::max(a.c_.size(), b.c_.size()), ScalarTraits<R>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<R> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(ScalarTraits<R>::zero() - x);
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, ScalarTraits<R>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    Poly scaled(const R& s) const {
        if (ScalarTraits<R>::is_zero(s)) return Poly();
        std::vector<R> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(x * s);
        return Poly(std::move(out));
    }
    /// Multiplication by x^k.
    Poly shifted_up(int k) const {
        if (is_zero()) return Poly();
        std::vector<R> out(c_.size() + k, ScalarTraits<R>::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Poly(std::move(out));
    }

    /// Horner evaluation at a point of R (or any ring containing R).
    R eval(const R& x) const {
        R acc = ScalarTraits<R>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(x + a): composition with the shifted variable.
    Poly var_shifted(const R& a) const {
        Poly acc;
        const Poly lin(std::vector<R>{a, ScalarTraits<R>::one()});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    static bool is_unit_coeff(const R& x) {
        return !ScalarTraits<R>::is_zero(x) && ScalarTraits<R>::is_zero(x - ScalarTraits<R>::one());
    }
    void trim() {
        while (!c_.empty() && ScalarTraits<R>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using Poly1 = Poly<Rational>;
using Poly2 = Poly<Poly1>;  ///< bivariate: outer variable u, inner variable v
using PolyZ = Poly<Int>;
using PolyZ2 = Poly<PolyZ>;

/// Quotient and remainder over a coefficient field; DivisionByZero if b = 0.
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly<R> rem = a;
    if (a.degree() < b.degree()) return {Poly<R>(), rem};
    std::vector<R> q(a.degree() - b.degree() + 1, ScalarTraits<R>::zero());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int k = rem.degree() - b.degree();
        R factor = rem.lc() / b.lc();
        q[k] = factor;
        rem = rem - b.scaled(factor).shifted_up(k);
    }
    return {Poly<R>(std::move(q)), rem};
}

template <class R>
Poly<R> poly_monic(const Poly<R>& p) {
    if (p.is_zero()) return p;
    return p.scaled(ScalarTraits<R>::one() / p.lc());
}

/// Monic gcd via the Euclidean algorithm; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        a = poly_divmod(a, b).second;
        std::swap(a, b);
        // Keeping remainders monic tames coefficient growth in towers.
        b = poly_monic(b);
    }
    return poly_monic(a);
}

/// Exact quotient; VerificationError if the division leaves a remainder.
template <class R>
Poly<R> poly_exact_div(const Poly<R>& a, const Poly<R>& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw VerificationError("inexact polynomial division");
    return q;
}

/// All rational roots with multiplicities plus the rootless cofactor, so that
/// p = remainder * prod (x - r)^m. Roots are listed in increasing order.
struct RootList {
    std::vector<std::pair<Rational, int>> roots;
    Poly1 remainder;
};
RootList rational_roots(const Poly1& p);

/// Parses "c0,c1,..." (ascending coefficients) into a polynomial.
Poly1 poly_parse(const std::string& text);
std::string poly_str(const Poly1& p, const std::string& var = "u");

}  // namespace superyang
