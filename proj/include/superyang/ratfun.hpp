#pragma once

#include <string>
#include <vector>

#include "superyang/poly.hpp"

namespace superyang {

/// Reduced rational function over Q in one variable. Canonical form: the
/// denominator is monic and coprime to the numerator (any scalar sits in the
/// numerator), and zero is 0/1, so equality of values equals structural
/// equality of the representation.
class RatFun {
public:
    RatFun() : den_(Rational(1)) {}
    explicit RatFun(Rational c) : num_(Poly1(std::move(c))), den_(Rational(1)) {}
    explicit RatFun(Poly1 p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFun(Poly1 num, Poly1 den);

    static RatFun variable() { return RatFun(Poly1::variable()); }
    /// (u + a) as a rational function.
    static RatFun linear(const Rational& a) {
        return RatFun(Poly1(std::vector<Rational>{a, Rational(1)}));
    }

    const Poly1& num() const { return num_; }
    const Poly1& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// The polynomial value; DomainError when the denominator is not 1.
    const Poly1& as_poly() const;
    bool is_constant() const { return den_.is_one() && num_.degree() <= 0; }
    Rational constant() const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun operator-() const;
    RatFun inv() const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// f(u + a).
    RatFun shifted(const Rational& a) const;
    /// Value at a rational point; PoleError on a pole of the reduced form.
    Rational eval(const Rational& x) const;

    /// Coefficients of u^0, u^{-1}, ..., u^{-(count-1)} in the expansion at
    /// infinity; DomainError if the function has a pole at infinity.
    std::vector<Rational> series_at_inf(int count) const;

    std::string str(const std::string& var = "u") const;

private:
    Poly1 num_, den_;
};

template <>
struct ScalarTraits<RatFun> {
    static RatFun zero() { return RatFun(); }
    static RatFun one() { return RatFun(Rational(1)); }
    static bool is_zero(const RatFun& f) { return f.is_zero(); }
    static RatFun from_rational(const Rational& r) { return RatFun(r); }
};

}  // namespace superyang
