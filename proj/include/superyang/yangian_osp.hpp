#pragma once

#include <vector>

#include "superyang/rep.hpp"
#include "superyang/space.hpp"

namespace superyang {

/// Tensor product of shifted orthosymplectic vector representations (both
/// OSP and OSP0 kinds), with its cleared denominator.
struct OspTensorModule {
    TensorRep<Poly1> rep;
    Poly1 den;
};
OspTensorModule osp_tensor_module(const SuperSpace& v, const std::vector<Rational>& shifts);

// ============================================================================
// The skew subspace of the shifted tensor square and its alternating powers
// ============================================================================

/// w_k = e_0 (x) e_k - e_k (x) e_0 for a middle index k (1 <= k <= dim-2),
/// inside V (x) V.
SparseVec<Rational> w_vector(const SuperSpace& v, int k);

/// Ambient basis matrix of span{w_1, ..., w_{dim-2}}.
Mat<Rational> w_basis(const SuperSpace& v);

/// d nested shifted tensor squares: site shifts (-1, 0, -2, -1, ..., -d, -d+1).
OspTensorModule xi_ambient(const SuperSpace& v, int d);

/// Alternating sum over products of d distinct skew vectors with labels
/// 1..d, one per tensor-square pair.
SparseVec<Poly1> xi_vector(const SuperSpace& v, int d);

/// Verifies the alternating vector is singular and measures all diagonal
/// eigenvalues (the full tuple, one entry per basis index).
std::vector<RatFun> xi_weights(const SuperSpace& v, int d);

/// Stated eigenvalues for the first n + 2 diagonal entries of the
/// alternating vector of degree d <= n in osp(2|2n).
std::vector<RatFun> xi_expected_prefix(int n, int d);

/// On span{w_k} of the shifted tensor square: the middle generator block
/// reproduces the OSP0 one-site action (scaled by the ambient denominator)
/// and the two corner generators act by the stated scalars.
bool w_module_matches(const SuperSpace& v);

// ============================================================================
// Weight-tuple conditions
// ============================================================================

/// lambda_i(u) lambda_{i'}(u+n-i+2) = lambda_{i+1}(u) lambda_{(i+1)'}(u+n-i+2)
/// for i = 1..n, on a full tuple of 2n + 2 entries.
bool consistency_conditions_hold(const std::vector<RatFun>& lambda, int n);

/// Recomputes the tail entries (indices n+3 .. 2n+2) from the first n+2 via
/// the conditions and compares with the given full tuple.
bool completion_matches(const std::vector<RatFun>& lambda, int n);

// ============================================================================
// Central series
// ============================================================================

/// C_ij w = sum_k (-1)^{|k||j|+|j|} tau_k tau_j
///            t_ik(u - kappa) t_{j'k'}(u) w   (cleared throughout).
SparseVec<Poly1> central_series_apply(const OspTensorModule& shifted /* at u - kappa */,
                                      const OspTensorModule& plain /* at u */, int i, int j,
                                      const SparseVec<Poly1>& w);

/// Builds the companion module shifted by -kappa for the same site shifts.
OspTensorModule central_series_companion(const SuperSpace& v,
                                         const std::vector<Rational>& shifts);

/// Full-matrix check on a small module: C_ij vanishes for i != j and every
/// C_ii acts by one and the same operator.
bool central_series_matrix_identity(const SuperSpace& v, const std::vector<Rational>& shifts);

/// The scalar by which the central series acts on an eigenvector; throws
/// VerificationError if the vector is not a joint eigenvector of every C_ii
/// or some C_ij, i != j, fails to annihilate it.
RatFun central_series_scalar(const SuperSpace& v, const std::vector<Rational>& shifts,
                             const SparseVec<Poly1>& xi);

/// Rational-coefficient snapshot of a module action at u = x.
TensorRep<Rational> evaluate_rep(const TensorRep<Poly1>& rep, const Rational& x);

/// Verifies C_ij xi = delta_ij * predicted * xi (cleared throughout) by exact
/// evaluation at deg den_plain + deg den_shifted + 1 rational points. Both
/// sides are polynomial vectors of degree bounded by that sum, so agreement
/// at that many distinct points is a proof of the identity.
bool central_series_value_matches(const SuperSpace& v, const std::vector<Rational>& shifts,
                                  const SparseVec<Poly1>& xi, const RatFun& predicted);

/// First-order generator coefficients on the vector representation,
/// antisymmetrized with respect to the bilinear form, match the
/// form-preserving elementary matrices.
bool embedding_matches(const SuperSpace& v);

}  // namespace superyang
