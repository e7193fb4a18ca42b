#pragma once

#include <memory>
#include <string>
#include <vector>

#include "superyang/ratfun.hpp"

namespace superyang {

/// Element of the iterated fraction-field tower
///   Q  =  level 0   subset of   Q(x_1)  =  level 1   subset of   Q(x_1)(x_2)  ...
/// A level-k element is a reduced fraction of polynomials in x_k whose
/// coefficients live at levels below k; level 0 holds a plain rational.
/// Canonical form at every level: denominator monic, fraction reduced, and any
/// fraction that collapses to a constant is stored at the lower level, so
/// structural equality coincides with equality in the field.
///
/// Substitution always replaces the highest (outermost) variable of the value
/// being processed, which matches evaluating x_k before x_{k-1}.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(Rational c) : r_(std::move(c)) {}  // NOLINT: implicit by design
    FieldElem(long c) : r_(c) {}                 // NOLINT: implicit by design

    /// The variable x_level (level >= 1).
    static FieldElem variable(int level);
    /// x_level + a.
    static FieldElem linear(int level, const Rational& a);
    /// num/den at the given level, normalized; DivisionByZero if den = 0.
    static FieldElem make(int level, Poly<FieldElem> num, Poly<FieldElem> den);
    /// Lifts a one-variable rational function to the given level.
    static FieldElem from_ratfun(const RatFun& f, int level);

    int level() const { return lvl_; }
    bool is_zero() const { return lvl_ == 0 && sgn(r_) == 0; }
    bool is_one() const { return lvl_ == 0 && r_ == 1; }
    bool is_rational() const { return lvl_ == 0; }
    const Rational& rat() const;
    const Poly<FieldElem>& num() const;
    const Poly<FieldElem>& den() const;

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    /// Replaces x_level by the value (whose level must be lower). Elements not
    /// involving that variable pass through; substituting an inner variable
    /// while an outer one is still present is rejected.
    FieldElem substitute(int level, const FieldElem& value) const;

    /// Conversion to a one-variable rational function (level <= 1 only).
    RatFun to_ratfun() const;

    std::string str() const;

private:
    struct Frac;
    FieldElem(int lvl, std::shared_ptr<const Frac> f) : lvl_(lvl), f_(std::move(f)) {}

    int lvl_ = 0;
    Rational r_{0};
    std::shared_ptr<const Frac> f_;
};

template <>
struct ScalarTraits<FieldElem> {
    static FieldElem zero() { return FieldElem(); }
    static FieldElem one() { return FieldElem(Rational(1)); }
    static bool is_zero(const FieldElem& x) { return x.is_zero(); }
    static FieldElem from_rational(const Rational& r) { return FieldElem(r); }
};

using TowerPoly = Poly<FieldElem>;

/// Applies substitutions outermost-first: values[k] replaces x_{level_top - k}.
/// Every value must be a rational constant or of lower level than its target.
FieldElem tower_substitute(FieldElem e, int level_top, const std::vector<FieldElem>& values);

}  // namespace superyang
