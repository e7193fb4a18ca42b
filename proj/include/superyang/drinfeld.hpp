#pragma once

#include <utility>
#include <vector>

#include "superyang/poly.hpp"
#include "superyang/ratfun.hpp"

namespace superyang {

/// The polynomial data classifying a finite-dimensional irreducible module
/// over the orthosymplectic Yangian of rank n: a pair (qbar, q) carrying the
/// first weight ratio and polynomials p[0..n-1] = P_2..P_{n+1} carrying the
/// remaining consecutive ratios (shift step 1 for P_2..P_n, step 2 for
/// P_{n+1}). All components are monic.
struct DrinfeldTuple {
    Poly1 qbar;
    Poly1 q;
    std::vector<Poly1> p;

    int n() const { return static_cast<int>(p.size()); }

    friend bool operator==(const DrinfeldTuple& a, const DrinfeldTuple& b) {
        return a.qbar == b.qbar && a.q == b.q && a.p == b.p;
    }
    friend bool operator!=(const DrinfeldTuple& a, const DrinfeldTuple& b) { return !(a == b); }
};

/// The identity tuple (1, 1, 1, ..., 1) of rank n.
DrinfeldTuple ones_tuple(int n);

/// DomainError unless every component is monic (nonzero with leading
/// coefficient 1; the constant 1 qualifies).
void require_monic_tuple(const DrinfeldTuple& t);

/// The unique monic solution P with rational roots of
///   P(u + step) / P(u) = ratio.
/// Matches each denominator root b to a numerator root a with
/// (b - a)/step a positive integer (smallest eligible a first) and rebuilds
/// P from the arithmetic strings a+step, a+2*step, ..., b; any valid matching
/// yields the same product, so the result is canonical. Throws
/// IrrationalRoots if either side fails to factor over the rationals and
/// NoSolution if the ratio is not a monic same-degree quotient or the
/// matching fails.
Poly1 solve_shift_ratio(const RatFun& ratio, int step);

/// Reads the tuple off a reduced highest weight (lambda_1, ..., lambda_{n+2})
/// via the ratio equations
///   lambda_1/lambda_2         = qbar/q            (monic reduced form),
///   lambda_{i+1}/lambda_i     = P_i(u+1)/P_i(u)   for i = 2..n,
///   lambda_{n+2}/lambda_{n+1} = P_{n+1}(u+2)/P_{n+1}(u).
/// NoSolution is a meaningful verdict: the weight is not of the
/// finite-dimensional classification shape.
DrinfeldTuple drinfeld_from_weight(const std::vector<RatFun>& lambda);

/// The canonical weight representative of a tuple in the lambda_2 = 1 gauge:
/// lambda_1 = qbar/q and each later entry is the telescoped product of the
/// P-ratios. drinfeld_from_weight inverts this exactly whenever qbar and q
/// are coprime.
std::vector<RatFun> weight_from_drinfeld(const DrinfeldTuple& t);

/// Tuple of the tensor product of two modules: componentwise product with
/// the common factor d(u) = gcd(qbar * qbar2, q * q2) divided out of the
/// first two entries; the P components multiply with no division.
DrinfeldTuple tensor_transition(const DrinfeldTuple& a, const DrinfeldTuple& b);

/// Applies the shift automorphism u -> u + a to every component.
DrinfeldTuple shift_tuple(const DrinfeldTuple& t, const Rational& a);

/// Divides qbar and q by their gcd; the result is the classification form
/// for the quotient Yangian, which requires the reduced pair to have equal
/// degrees (DegreeMismatch otherwise: such a tuple labels a module of the
/// extended algebra only).
DrinfeldTuple y_classification_normalize(const DrinfeldTuple& t);

/// A fixed deterministic corpus of tuple pairs exercising the tensor
/// transition rule: coprime pairs, cross cancellations, repeated roots,
/// non-integer roots, and both small ranks.
std::vector<std::pair<DrinfeldTuple, DrinfeldTuple>> transition_corpus();

}  // namespace superyang
