#pragma once

#include <gmpxx.h>

#include <string>

#include "superyang/errors.hpp"

namespace superyang {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational in canonical reduced form (positive
/// denominator, coprime numerator and denominator); GMP maintains the
/// invariant on every operation.
using Rational = mpq_class;

/// Parses "p" or "p/q" with optional sign; rejects empty parts and q = 0.
Rational rat_parse(const std::string& text);

/// Renders canonically as "p" (denominator 1) or "p/q".
std::string rat_str(const Rational& r);

/// True when the denominator is 1.
bool rat_is_integer(const Rational& r);

/// The integer value of an integral rational; DomainError otherwise.
long rat_to_long(const Rational& r);

inline Rational rat_of(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace superyang
