#include "superyang/tower.hpp"

namespace superyang {

struct FieldElem::Frac {
    TowerPoly num, den;
};

namespace {

/// View of an element as a fraction of polynomials at the given level.
struct FracView {
    TowerPoly num, den;
};

}  // namespace

static FracView view_at(const FieldElem& x, int level) {
    if (x.level() == level && level > 0) return {x.num(), x.den()};
    return {TowerPoly(x), TowerPoly(FieldElem(Rational(1)))};
}

FieldElem FieldElem::variable(int level) {
    if (level < 1) throw DomainError("tower variable level must be >= 1");
    return make(level, TowerPoly::variable(), TowerPoly(FieldElem(Rational(1))));
}

FieldElem FieldElem::linear(int level, const Rational& a) {
    return variable(level) + FieldElem(a);
}

FieldElem FieldElem::make(int level, TowerPoly num, TowerPoly den) {
    if (level < 1) throw DomainError("tower fraction level must be >= 1");
    if (den.is_zero()) throw DivisionByZero("tower fraction with zero denominator");
    for (const FieldElem& c : num.coeffs())
        if (c.level() >= level) throw DomainError("coefficient level not below fraction level");
    for (const FieldElem& c : den.coeffs())
        if (c.level() >= level) throw DomainError("coefficient level not below fraction level");
    if (num.is_zero()) return FieldElem();
    const TowerPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_exact_div(num, g);
        den = poly_exact_div(den, g);
    }
    const FieldElem scale = den.lc().inv();
    num = num.scaled(scale);
    den = den.scaled(scale);
    if (den.is_one() && num.degree() == 0) return num.coeff(0);
    return FieldElem(level, std::make_shared<Frac>(Frac{std::move(num), std::move(den)}));
}

FieldElem FieldElem::from_ratfun(const RatFun& f, int level) {
    const auto lift = [](const Poly1& p) {
        std::vector<FieldElem> c;
        c.reserve(p.coeffs().size());
        for (const Rational& r : p.coeffs()) c.emplace_back(r);
        return TowerPoly(std::move(c));
    };
    return make(level, lift(f.num()), lift(f.den()));
}

const Rational& FieldElem::rat() const {
    if (lvl_ != 0) throw DomainError("tower element is not a rational constant");
    return r_;
}

const TowerPoly& FieldElem::num() const {
    if (lvl_ == 0) throw DomainError("rational constant has no fraction parts");
    return f_->num;
}

const TowerPoly& FieldElem::den() const {
    if (lvl_ == 0) throw DomainError("rational constant has no fraction parts");
    return f_->den;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const int L = std::max(a.lvl_, b.lvl_);
    if (L == 0) return FieldElem(a.r_ + b.r_);
    const FracView x = view_at(a, L), y = view_at(b, L);
    return FieldElem::make(L, x.num * y.den + y.num * x.den, x.den * y.den);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const int L = std::max(a.lvl_, b.lvl_);
    if (L == 0) return FieldElem(a.r_ * b.r_);
    const FracView x = view_at(a, L), y = view_at(b, L);
    return FieldElem::make(L, x.num * y.num, x.den * y.den);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }

FieldElem FieldElem::operator-() const {
    if (lvl_ == 0) return FieldElem(-r_);
    return FieldElem(lvl_, std::make_shared<Frac>(Frac{-f_->num, f_->den}));
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero tower element");
    if (lvl_ == 0) return FieldElem(Rational(1) / r_);
    return make(lvl_, f_->den, f_->num);
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (a.lvl_ != b.lvl_) return false;
    if (a.lvl_ == 0) return a.r_ == b.r_;
    return a.f_->num == b.f_->num && a.f_->den == b.f_->den;
}

FieldElem FieldElem::substitute(int level, const FieldElem& value) const {
    if (value.level() >= level) throw DomainError("substituted value must have lower level");
    if (lvl_ < level) return *this;
    if (lvl_ > level) throw DomainError("substitute outer tower variables first");
    const FieldElem n = f_->num.eval(value);
    const FieldElem d = f_->den.eval(value);
    if (d.is_zero()) throw PoleError("substitution hit a pole at level " + std::to_string(level));
    return n / d;
}

RatFun FieldElem::to_ratfun() const {
    if (lvl_ == 0) return RatFun(r_);
    if (lvl_ > 1) throw DomainError("tower element involves more than one variable");
    const auto drop = [](const TowerPoly& p) {
        std::vector<Rational> c;
        c.reserve(p.coeffs().size());
        for (const FieldElem& x : p.coeffs()) c.push_back(x.rat());
        return Poly1(std::move(c));
    };
    return RatFun(drop(f_->num), drop(f_->den));
}

std::string FieldElem::str() const {
    if (lvl_ == 0) return rat_str(r_);
    const auto poly_text = [this](const TowerPoly& p) {
        std::string out;
        for (int k = p.degree(); k >= 0; --k) {
            const FieldElem c = p.coeff(k);
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")";
            if (k > 0) out += "*x" + std::to_string(lvl_) + (k > 1 ? "^" + std::to_string(k) : "");
        }
        return out.empty() ? std::string("0") : out;
    };
    if (f_->den.is_one()) return poly_text(f_->num);
    return "[" + poly_text(f_->num) + "] / [" + poly_text(f_->den) + "]";
}

FieldElem tower_substitute(FieldElem e, int level_top, const std::vector<FieldElem>& values) {
    int level = level_top;
    for (const FieldElem& v : values) {
        if (level < 1) throw DomainError("more substitution values than tower levels");
        e = e.substitute(level, v);
        --level;
    }
    return e;
}

}  // namespace superyang
