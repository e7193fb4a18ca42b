#pragma once

#include <map>
#include <utility>
#include <vector>

#include "superyang/linalg.hpp"
#include "superyang/ops.hpp"
#include "superyang/poly.hpp"
#include "superyang/ratfun.hpp"
#include "superyang/space.hpp"

namespace superyang {

/// Which rational R-matrix family a GL-kind module is built from.
enum class Variant { R, Rprime };

/// Action of the generator family t_{k,k2}(u) on one tensor site, tabulated
/// by (left generator index k, input digit w); each entry gives the right
/// generator index, the output digit, and a polynomial coefficient (cleared
/// of the site denominator).
template <class K>
class OneSiteRep {
public:
    struct Entry {
        int k2, w2;
        K coeff;
    };

    explicit OneSiteRep(int dim) : n_(dim), t_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return n_; }

    void add(int k, int w, int k2, int w2, const K& c) {
        if (ScalarTraits<K>::is_zero(c)) return;
        auto& cell = t_[static_cast<std::size_t>(k) * n_ + w];
        for (auto& e : cell) {
            if (e.k2 == k2 && e.w2 == w2) {
                e.coeff = e.coeff + c;
                if (ScalarTraits<K>::is_zero(e.coeff)) cell.erase(cell.begin() + (&e - cell.data()));
                return;
            }
        }
        cell.push_back(Entry{k2, w2, c});
    }

    const std::vector<Entry>& at(int k, int w) const {
        return t_[static_cast<std::size_t>(k) * n_ + w];
    }

private:
    int n_;
    std::vector<std::vector<Entry>> t_;
};

/// One-site generator table together with its cleared denominator: the true
/// action is table / den.
struct ClearedSite {
    OneSiteRep<Poly1> rep;
    Poly1 den;
};

/// GL-kind vector representation site acting at the shifted point u + shift.
ClearedSite site_gl_vector(const SuperSpace& v, Variant variant, const Rational& shift);
/// Orthosymplectic vector representation site (OSP and OSP0 kinds) at u + shift.
ClearedSite site_osp_vector(const SuperSpace& v, const Rational& shift);

/// Tensor product of one-site representations: t_ij acts by summing over all
/// index paths i = k_0 -> k_1 -> ... -> k_d = j, the a-th factor acting on
/// site a with the grading sign (-1)^{(|k_{a-1}|+|k_a|) * (input parity of
/// sites before a)}.
template <class K>
class TensorRep {
public:
    TensorRep(SuperSpace gen, TensorSpace space, std::vector<OneSiteRep<K>> sites)
        : gen_(std::move(gen)), space_(std::move(space)), sites_(std::move(sites)) {
        if (static_cast<int>(sites_.size()) != space_.sites())
            throw DomainError("site count mismatch");
    }

    const SuperSpace& gen_space() const { return gen_; }
    const TensorSpace& space() const { return space_; }
    int gen_dim() const { return gen_.dim(); }
    const OneSiteRep<K>& site(int a) const { return sites_[static_cast<std::size_t>(a)]; }

    SparseVec<K> apply(int i, int j, const SparseVec<K>& v) const {
        SparseVec<K> out;
        const int d = space_.sites();
        std::vector<int> digits(d);
        std::map<std::pair<int, long>, K> states, next;
        for (const auto& [idx, val] : v.terms()) {
            space_.digits_of(idx, digits);
            states.clear();
            states.emplace(std::make_pair(i, 0L), val);
            int prefix = 0;
            for (int a = 0; a < d && !states.empty(); ++a) {
                next.clear();
                const int w = digits[a];
                const long stride = space_.sites() == 0 ? 1 : stride_of(a);
                for (const auto& [key, c] : states) {
                    const int k = key.first;
                    const long pidx = key.second;
                    const int par_k = gen_.parity(k);
                    for (const auto& e : sites_[a].at(k, w)) {
                        K nc = c * e.coeff;
                        if (((par_k + gen_.parity(e.k2)) & 1) && (prefix & 1))
                            nc = ScalarTraits<K>::zero() - nc;
                        const auto nkey = std::make_pair(e.k2, pidx + stride * e.w2);
                        auto it = next.find(nkey);
                        if (it == next.end())
                            next.emplace(nkey, std::move(nc));
                        else
                            it->second = it->second + nc;
                    }
                }
                states.swap(next);
                prefix += space_.factor(a).parity(w);
            }
            for (const auto& [key, c] : states)
                if (key.first == j) out.add(key.second, c);
        }
        return out;
    }

private:
    long stride_of(int a) const {
        long s = 1;
        for (int b = a + 1; b < space_.sites(); ++b) s *= space_.factor(b).dim();
        return s;
    }

    SuperSpace gen_;
    TensorSpace space_;
    std::vector<OneSiteRep<K>> sites_;
};

/// Assembles the cleared tensor product of one-site representations and the
/// combined denominator.
std::pair<TensorRep<Poly1>, Poly1> tensor_rep(const SuperSpace& v,
                                              const std::vector<ClearedSite>& sites);

/// Bivariate lifts treating an existing polynomial as living in the outer
/// variable u or the inner variable v.
Poly2 poly2_in_u(const Poly1& p);
Poly2 poly2_in_v(const Poly1& p);
OneSiteRep<Poly2> lift_site_u(const OneSiteRep<Poly1>& s);
OneSiteRep<Poly2> lift_site_v(const OneSiteRep<Poly1>& s);

/// The product-realization factor of one site: the two-slot operator on
/// aux (x) site sending e_j (x) e_w to sum_i (t_ij table value at w) e_i (x)
/// e_{w2}. Chaining these factors over a shared auxiliary slot reproduces
/// the coproduct action of the sites.
template <class K>
TwoSlotOp<K> site_factor(int gen_dim, const OneSiteRep<K>& site) {
    TwoSlotOp<K> op(gen_dim, site.dim());
    for (int k = 0; k < gen_dim; ++k)
        for (int w = 0; w < site.dim(); ++w)
            for (const auto& e : site.at(k, w)) op.add(e.k2, w, k, e.w2, e.coeff);
    return op;
}

/// The product realization over an auxiliary slot: factors act on slots
/// (0, 1+site) of aux (x) V^{(x) d} and multiply left to right as written
/// (the rightmost factor is applied first). The generator action reads off
/// the aux block: t_ij w = e_i component of (product)(e_j (x) w).
struct AuxFactor {
    int site;  ///< 0-based tensor site the factor couples to the aux slot
    TwoSlotOp<Poly1> op;
};
SparseVec<Poly1> product_realization_apply(const SuperSpace& v, const TensorSpace& sites_space,
                                           const std::vector<AuxFactor>& factors, int i, int j,
                                           const SparseVec<Poly1>& w);

// ============================================================================
// Rational singular vectors and highest weights
// ============================================================================

/// Stacks the u-power coefficient rows of a polynomial matrix over Q.
Mat<Rational> stack_coefficients(const Mat<Poly1>& m);

/// Basis of rational vectors annihilated identically in u by every matrix.
Mat<Rational> joint_kernel(long dim, const std::vector<Mat<Poly1>>& mats);

struct HighestWeight {
    std::vector<RatFun> lambda;   ///< diagonal eigenvalues as rational functions
    std::vector<Rational> vec;    ///< the singular vector found (coordinates)
    long singular_dim = 0;        ///< dimension of the rational singular space
};

/// Finds the joint rational kernel of the upper generator matrices, checks it
/// is one-dimensional, and measures the diagonal eigenvalues on it.
/// VerificationError if the singular space is not a line or the diagonal
/// action is not scalar on it.
HighestWeight highest_weight_from_mats(const std::vector<Mat<Poly1>>& uppers,
                                       const std::vector<Mat<Poly1>>& diags, const Poly1& den);

/// Verifies the given vector is killed by all upper generators and measures
/// the diagonal eigenvalues on it; works at vector level so it scales to
/// modules far too large for dense matrices.
template <class ApplyFn>
std::vector<RatFun> measure_weights(ApplyFn&& act, int gen_dim, const SparseVec<Poly1>& xi,
                                    const Poly1& den) {
    if (xi.is_zero()) throw DomainError("cannot measure weights on the zero vector");
    for (int i = 0; i < gen_dim; ++i)
        for (int j = i + 1; j < gen_dim; ++j)
            if (!act(i, j, xi).is_zero())
                throw VerificationError("vector is not singular: generator (" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") does not annihilate it");
    std::vector<RatFun> lambda;
    const auto& [p0, c0] = *xi.terms().begin();
    if (c0.degree() > 0)
        throw DomainError("weight measurement expects a vector with constant coordinates");
    for (int i = 0; i < gen_dim; ++i) {
        const SparseVec<Poly1> y = act(i, i, xi);
        const Poly1 mu = y.coeff(p0).scaled(Rational(1) / c0.coeff(0));
        if (y != xi.scaled(mu))
            throw VerificationError("diagonal generator is not scalar on the vector");
        lambda.emplace_back(mu, den);
    }
    return lambda;
}

/// Dense coordinates of a sparse rational vector.
std::vector<Rational> dense_rational(const SparseVec<Rational>& v, long dim);

}  // namespace superyang
