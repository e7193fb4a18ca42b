#pragma once

#include <vector>

#include "superyang/groupalg.hpp"
#include "superyang/rep.hpp"
#include "superyang/residual.hpp"
#include "superyang/space.hpp"

namespace superyang {

// ============================================================================
// GL-kind modules
// ============================================================================

/// Tensor product of shifted vector representations, with its cleared
/// denominator. Shift s means the site acts at u + s.
struct GlTensorModule {
    TensorRep<Poly1> rep;
    Poly1 den;
};
GlTensorModule gl_tensor_module(const SuperSpace& v, Variant variant,
                                const std::vector<Rational>& shifts);

/// The same module family in product form over an auxiliary slot: variant R
/// multiplies R-factors at u - c_a left to right in site order, variant
/// Rprime multiplies companion factors at -u - c_a in reversed site order.
struct GlProductModule {
    std::vector<AuxFactor> factors;
    Poly1 den;
};
GlProductModule gl_product_module(const SuperSpace& v, Variant variant,
                                  const std::vector<Rational>& contents);

/// Evaluation action on V^{(x) d}, cleared of its single pole:
/// u d_ij + (-1)^{|i|} E_ij with E_ij the graded sum over sites.
SparseVec<Poly1> evaluation_apply(const SuperSpace& v, const TensorSpace& t, int i, int j,
                                  const SparseVec<Poly1>& w);

// ============================================================================
// Modules cut out by a symmetric-group idempotent
// ============================================================================

/// A module realized on an invariant subspace of V^{(x) d}: an ambient basis
/// of the subspace plus the full family of generator matrices in subspace
/// coordinates (row-major generator index i * N + j).
struct RestrictedModule {
    Mat<Rational> basis;
    std::vector<Mat<Poly1>> mats;
    Poly1 den;
    long dim = 0;
};

/// Image of the tableau idempotent inside the shifted tensor module whose
/// shifts are the box contents of U; invariance of the image is verified
/// exactly during construction.
RestrictedModule eu_module(const SuperSpace& v, const Tableau& u, Variant variant);

/// Rank of the tableau idempotent acting on V^{(x) d}.
long eu_rank(const SuperSpace& v, const Tableau& u);

/// Sum over all shapes of d of (number of standard tableaux) x (idempotent
/// rank) must equal dim(V)^d, with rank zero exactly off the (m,n) hook.
bool schur_sergeev_rank_law(const SuperSpace& v, int d);

/// Highest weight of the idempotent-image module, with the singular space
/// verified to be a line.
HighestWeight eu_highest_weight(const SuperSpace& v, const Tableau& u, Variant variant);

/// Predicted highest weights for the two variants, as rational functions:
/// variant R uses the complementary row/column data of the hook partition,
/// variant Rprime the partition itself.
std::vector<RatFun> expected_weight_flat(int m, int n, const Partition& lambda);
std::vector<RatFun> expected_weight_sharp(int m, int n, const Partition& lambda);

// ============================================================================
// Fusion identities over an auxiliary slot
// ============================================================================

/// u R_{01}(u-c_1) ... R_{0d}(u-c_d) (1 (x) E_U)
///   = (u-c_1)...(u-c_d) (1 (x) E_U) (u - sum_a P_{0a})  on aux (x) V^{(x) d}.
bool kfus_holds(const SuperSpace& v, const Tableau& u);

/// The companion-factor analogue at arguments -u - c_a in reversed order,
/// with right-hand factor (u + sum_a Q_{0a}).
bool kfustr_holds(const SuperSpace& v, const Tableau& u);

}  // namespace superyang
