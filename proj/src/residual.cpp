#include "superyang/residual.hpp"

#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "superyang/errors.hpp"

namespace superyang {

TwoSlotOp<Poly2> aux_r12(const SuperSpace& v) {
    const Poly2 u = Poly2::variable();
    const Poly2 w = poly2_in_v(Poly1::variable());
    const Poly2 x = u - w;
    return v.has_form() ? rhat_osp(v, x) : rhat_gl(v, x);
}

// ============================================================================
// Yang-Baxter residual
// ============================================================================

bool ybe_holds(const SuperSpace& v) {
    const TensorSpace t = TensorSpace::power(v, 3);
    const Poly2 u = Poly2::variable();
    const Poly2 w = poly2_in_v(Poly1::variable());
    TwoSlotOp<Poly2> r12(0, 0), r13(0, 0), r23(0, 0);
    if (v.has_form()) {
        r12 = rhat_osp(v, u - w);
        r13 = rhat_osp(v, u);
        r23 = rhat_osp(v, w);
    } else {
        r12 = rhat_gl(v, u - w);
        r13 = rhat_gl(v, u);
        r23 = rhat_gl(v, w);
    }
    for (long col = 0; col < t.dim(); ++col) {
        SparseVec<Poly2> x = SparseVec<Poly2>::unit(col, ScalarTraits<Poly2>::one());
        SparseVec<Poly2> lhs = apply_two_slot(t, r12, 0, 1,
                               apply_two_slot(t, r13, 0, 2,
                               apply_two_slot(t, r23, 1, 2, x)));
        SparseVec<Poly2> rhs = apply_two_slot(t, r23, 1, 2,
                               apply_two_slot(t, r13, 0, 2,
                               apply_two_slot(t, r12, 0, 1, x)));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// ============================================================================
// RTT residual
// ============================================================================

GenActionP2 action_from_tensor_rep(const TensorRep<Poly1>& rep, bool in_u) {
    std::vector<OneSiteRep<Poly2>> sites;
    for (int a = 0; a < rep.space().sites(); ++a) {
        // Rebuild per-site tables in the requested variable.
        OneSiteRep<Poly2> s(rep.gen_dim());
        for (int k = 0; k < rep.gen_dim(); ++k)
            for (int w = 0; w < rep.gen_dim(); ++w)
                for (const auto& e : rep.site(a).at(k, w))
                    s.add(k, w, e.k2, e.w2, in_u ? poly2_in_u(e.coeff) : poly2_in_v(e.coeff));
        sites.push_back(std::move(s));
    }
    auto lifted = std::make_shared<TensorRep<Poly2>>(rep.gen_space(), rep.space(), std::move(sites));
    return [lifted](int i, int j, const SparseVec<Poly2>& v) { return lifted->apply(i, j, v); };
}

GenActionP2 action_from_matrices(const std::vector<Mat<Poly1>>& mats, int gen_dim, bool in_u) {
    auto lift = std::make_shared<std::vector<Mat<Poly2>>>();
    lift->reserve(mats.size());
    for (const auto& m : mats) {
        Mat<Poly2> l(m.rows(), m.cols());
        for (long r = 0; r < m.rows(); ++r)
            for (long c = 0; c < m.cols(); ++c)
                l.at(r, c) = in_u ? poly2_in_u(m.at(r, c)) : poly2_in_v(m.at(r, c));
        lift->push_back(std::move(l));
    }
    return [lift, gen_dim](int i, int j, const SparseVec<Poly2>& v) {
        const Mat<Poly2>& m = (*lift)[static_cast<std::size_t>(i) * gen_dim + j];
        SparseVec<Poly2> out;
        for (const auto& [idx, val] : v.terms())
            for (long r = 0; r < m.rows(); ++r) {
                const Poly2& e = m.at(r, idx);
                if (!e.is_zero()) out.add(r, e * val);
            }
        return out;
    };
}

namespace {

/// Memoizes the module action on basis vectors and extends linearly.
class CachedAction {
public:
    CachedAction(const GenActionP2& act, int gen_dim, long mod_dim)
        : act_(act), n_(gen_dim), m_(mod_dim),
          cache_(static_cast<std::size_t>(gen_dim) * gen_dim * mod_dim) {}

    SparseVec<Poly2> operator()(int i, int j, const SparseVec<Poly2>& v) {
        SparseVec<Poly2> out;
        for (const auto& [idx, val] : v.terms()) out.add_scaled(basis(i, j, idx), val);
        return out;
    }

private:
    const SparseVec<Poly2>& basis(int i, int j, long w) {
        auto& slot = cache_[(static_cast<std::size_t>(i) * n_ + j) * m_ + w];
        if (!slot)
            slot = act_(i, j, SparseVec<Poly2>::unit(w, ScalarTraits<Poly2>::one()));
        return *slot;
    }

    const GenActionP2& act_;
    int n_;
    long m_;
    std::vector<std::optional<SparseVec<Poly2>>> cache_;
};

/// State over the two auxiliary slots: aux pair index -> module vector.
using Cell = std::map<long, SparseVec<Poly2>>;

void cell_add(Cell& c, long key, SparseVec<Poly2>&& v) {
    if (v.is_zero()) return;
    auto it = c.find(key);
    if (it == c.end())
        c.emplace(key, std::move(v));
    else
        for (const auto& [idx, val] : v.terms()) it->second.add(idx, val);
}

Cell apply_t2(const SuperSpace& aux, CachedAction& act, const Cell& in) {
    Cell out;
    const int n = aux.dim();
    for (const auto& [p, vec] : in) {
        const int b = static_cast<int>(p % n);
        const long a = p / n;
        for (int k = 0; k < n; ++k) cell_add(out, a * n + k, act(k, b, vec));
    }
    return out;
}

Cell apply_t1(const SuperSpace& aux, CachedAction& act, const Cell& in) {
    Cell out;
    const int n = aux.dim();
    for (const auto& [p, vec] : in) {
        const int b = static_cast<int>(p % n);
        const int a = static_cast<int>(p / n);
        for (int i = 0; i < n; ++i) {
            SparseVec<Poly2> y = act(i, a, vec);
            // The first copy of the matrix algebra crosses the second aux slot.
            if (((aux.parity(i) + aux.parity(a)) & 1) && aux.parity(b))
                y = y.scaled(ScalarTraits<Poly2>::zero() - ScalarTraits<Poly2>::one());
            cell_add(out, static_cast<long>(i) * n + b, std::move(y));
        }
    }
    return out;
}

Cell apply_r12(const SuperSpace& aux, const TwoSlotOp<Poly2>& r, const Cell& in) {
    Cell out;
    const int n = aux.dim();
    for (const auto& [p, vec] : in) {
        const int b = static_cast<int>(p % n);
        const int a = static_cast<int>(p / n);
        for (const auto& term : r.at(a, b))
            cell_add(out, static_cast<long>(term.out_a) * n + term.out_b, vec.scaled(term.coeff));
    }
    return out;
}

bool cells_equal(const Cell& x, const Cell& y) {
    for (const auto& [p, vec] : x) {
        auto it = y.find(p);
        if (it == y.end() ? !vec.is_zero() : !(vec == it->second)) return false;
    }
    for (const auto& [p, vec] : y)
        if (x.find(p) == x.end() && !vec.is_zero()) return false;
    return true;
}

}  // namespace

bool rtt_residual_zero(const SuperSpace& aux, long mod_dim, const TwoSlotOp<Poly2>& r12,
                       const GenActionP2& act_u, const GenActionP2& act_v) {
    const int n = aux.dim();
    CachedAction cu(act_u, n, mod_dim), cv(act_v, n, mod_dim);
    for (long w = 0; w < mod_dim; ++w)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Cell start;
                start.emplace(static_cast<long>(a) * n + b,
                              SparseVec<Poly2>::unit(w, ScalarTraits<Poly2>::one()));
                const Cell lhs = apply_r12(aux, r12, apply_t1(aux, cu, apply_t2(aux, cv, start)));
                const Cell rhs = apply_t2(aux, cv, apply_t1(aux, cu, apply_r12(aux, r12, start)));
                if (!cells_equal(lhs, rhs)) return false;
            }
    return true;
}

bool product_realization_matches(const SuperSpace& v, const std::vector<ClearedSite>& sites) {
    auto built = tensor_rep(v, sites);
    const TensorRep<Poly1>& rep = built.first;
    const int N = v.dim();
    const long dim = rep.space().dim();
    std::vector<AuxFactor> factors;
    factors.reserve(sites.size());
    for (int a = 0; a < static_cast<int>(sites.size()); ++a)
        factors.push_back(AuxFactor{a, site_factor(N, sites[static_cast<std::size_t>(a)].rep)});
    for (long w = 0; w < dim; ++w) {
        const SparseVec<Poly1> x = SparseVec<Poly1>::unit(w, ScalarTraits<Poly1>::one());
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (product_realization_apply(v, rep.space(), factors, i, j, x) !=
                    rep.apply(i, j, x))
                    return false;
    }
    return true;
}

bool rtt_residual_zero_product(const SuperSpace& v, const std::vector<ClearedSite>& sites) {
    const int N = v.dim();
    const int d = static_cast<int>(sites.size());
    std::vector<SuperSpace> ext_factors{v, v};
    for (int a = 0; a < d; ++a) ext_factors.push_back(v);
    const TensorSpace ext(ext_factors);
    const TwoSlotOp<Poly2> r12 = aux_r12(v);
    std::vector<TwoSlotOp<Poly2>> fu, fv;
    fu.reserve(static_cast<std::size_t>(d));
    fv.reserve(static_cast<std::size_t>(d));
    for (const auto& s : sites) {
        fu.push_back(site_factor(N, lift_site_u(s.rep)));
        fv.push_back(site_factor(N, lift_site_v(s.rep)));
    }
    for (long b = 0; b < ext.dim(); ++b) {
        const SparseVec<Poly2> x = SparseVec<Poly2>::unit(b, ScalarTraits<Poly2>::one());
        SparseVec<Poly2> lhs = x;
        for (int a = d - 1; a >= 0; --a)
            lhs = apply_two_slot(ext, fv[static_cast<std::size_t>(a)], 1, 2 + a, lhs);
        for (int a = d - 1; a >= 0; --a)
            lhs = apply_two_slot(ext, fu[static_cast<std::size_t>(a)], 0, 2 + a, lhs);
        lhs = apply_two_slot(ext, r12, 0, 1, lhs);
        SparseVec<Poly2> rhs = apply_two_slot(ext, r12, 0, 1, x);
        for (int a = d - 1; a >= 0; --a)
            rhs = apply_two_slot(ext, fu[static_cast<std::size_t>(a)], 0, 2 + a, rhs);
        for (int a = d - 1; a >= 0; --a)
            rhs = apply_two_slot(ext, fv[static_cast<std::size_t>(a)], 1, 2 + a, rhs);
        if (lhs != rhs) return false;
    }
    return true;
}

bool rtt_residual_zero_factored(const SuperSpace& v, const std::vector<ClearedSite>& sites) {
    if (!product_realization_matches(v, sites)) return false;
    const int d = static_cast<int>(sites.size());
    for (int c = 0; c < d; ++c)
        if (!rtt_residual_zero_product(v, {sites[static_cast<std::size_t>(c)]})) return false;
    const int N = v.dim();
    std::vector<SuperSpace> ext_factors{v, v};
    for (int a = 0; a < d; ++a) ext_factors.push_back(v);
    const TensorSpace ext(ext_factors);
    std::vector<TwoSlotOp<Poly2>> fu, fv;
    fu.reserve(static_cast<std::size_t>(d));
    fv.reserve(static_cast<std::size_t>(d));
    for (const auto& s : sites) {
        fu.push_back(site_factor(N, lift_site_u(s.rep)));
        fv.push_back(site_factor(N, lift_site_v(s.rep)));
    }
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
            if (x == y) continue;
            for (long b = 0; b < ext.dim(); ++b) {
                const SparseVec<Poly2> e = SparseVec<Poly2>::unit(b, ScalarTraits<Poly2>::one());
                const SparseVec<Poly2> ab = apply_two_slot(
                    ext, fu[static_cast<std::size_t>(x)], 0, 2 + x,
                    apply_two_slot(ext, fv[static_cast<std::size_t>(y)], 1, 2 + y, e));
                const SparseVec<Poly2> ba = apply_two_slot(
                    ext, fv[static_cast<std::size_t>(y)], 1, 2 + y,
                    apply_two_slot(ext, fu[static_cast<std::size_t>(x)], 0, 2 + x, e));
                if (ab != ba) return false;
            }
        }
    return true;
}

}  // namespace superyang
