#include "superyang/ratfun.hpp"

namespace superyang {

RatFun::RatFun(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly1(Rational(1));
        return;
    }
    const Poly1 g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
    }
    const Rational scale = Rational(1) / den_.lc();
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
}

const Poly1& RatFun::as_poly() const {
    if (!is_polynomial()) throw DomainError("rational function is not a polynomial");
    return num_;
}

Rational RatFun::constant() const {
    if (!is_constant()) throw DomainError("rational function is not constant");
    return num_.coeff(0);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inv(); }

RatFun RatFun::operator-() const {
    RatFun out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFun RatFun::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::shifted(const Rational& a) const {
    return RatFun(num_.var_shifted(a), den_.var_shifted(a));
}

Rational RatFun::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (ScalarTraits<Rational>::is_zero(d))
        throw PoleError("evaluation at a pole: " + rat_str(x));
    return num_.eval(x) / d;
}

std::vector<Rational> RatFun::series_at_inf(int count) const {
    if (num_.degree() > den_.degree())
        throw DomainError("pole at infinity: " + str());
    // In t = 1/u the function is the Taylor series of the reversed
    // coefficient sequences; divide those power series.
    const int d = den_.degree();
    const auto rev = [d](const Poly1& p) {
        std::vector<Rational> out(d + 1, Rational(0));
        for (int j = 0; j <= p.degree(); ++j) out[d - j] = p.coeff(j);
        return out;
    };
    const std::vector<Rational> a = rev(num_), b = rev(den_);
    std::vector<Rational> c(count, Rational(0));
    for (int k = 0; k < count; ++k) {
        Rational acc = k <= d ? a[k] : Rational(0);
        for (int i = 0; i < k; ++i)
            if (k - i <= d) acc -= c[i] * b[k - i];
        c[k] = acc / b[0];
    }
    return c;
}

std::string RatFun::str(const std::string& var) const {
    if (is_polynomial()) return poly_str(num_, var);
    const std::string n = poly_str(num_, var);
    const std::string d = poly_str(den_, var);
    const auto wrap = [](const std::string& s) {
        return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

}  // namespace superyang
