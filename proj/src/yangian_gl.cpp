#include "superyang/yangian_gl.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "superyang/errors.hpp"

namespace superyang {

namespace {

Poly1 linear_u(const Rational& c0, const Rational& c1) { return Poly1({c0, c1}); }

std::vector<Rational> content_shifts(const Tableau& u) {
    std::vector<Rational> out;
    for (int c : tableau_contents(u)) out.emplace_back(c);
    return out;
}

/// Lifts a group-algebra element on d points to d + 1 slots, fixing slot 0.
GroupAlg<Rational> shift_into_aux(const GroupAlg<Rational>& e, int d) {
    GroupAlg<Rational> out(d + 1);
    for (const auto& [p, c] : e.terms()) {
        PermVec q(static_cast<std::size_t>(d) + 1);
        q[0] = 0;
        for (int i = 0; i < d; ++i) q[static_cast<std::size_t>(i) + 1] = p[i] + 1;
        out.add(q, c);
    }
    return out;
}

}  // namespace

GlTensorModule gl_tensor_module(const SuperSpace& v, Variant variant,
                                const std::vector<Rational>& shifts) {
    std::vector<ClearedSite> sites;
    sites.reserve(shifts.size());
    for (const Rational& s : shifts) sites.push_back(site_gl_vector(v, variant, s));
    auto [rep, den] = tensor_rep(v, sites);
    return {std::move(rep), std::move(den)};
}

GlProductModule gl_product_module(const SuperSpace& v, Variant variant,
                                  const std::vector<Rational>& contents) {
    const int d = static_cast<int>(contents.size());
    GlProductModule out;
    out.den = Poly1(Rational(1));
    if (variant == Variant::R) {
        for (int a = 0; a < d; ++a) {
            const Poly1 x = linear_u(-contents[a], Rational(1));  // u - c_a
            out.factors.push_back(AuxFactor{a, rhat_gl(v, x)});
            out.den = out.den * x;
        }
    } else {
        for (int a = d - 1; a >= 0; --a) {
            const Poly1 x = linear_u(-contents[a], Rational(-1));  // -u - c_a
            out.factors.push_back(AuxFactor{a, rhat_gl_prime(v, x)});
            out.den = out.den * x;
        }
    }
    return out;
}

SparseVec<Poly1> evaluation_apply(const SuperSpace& v, const TensorSpace& t, int i, int j,
                                  const SparseVec<Poly1>& w) {
    SparseVec<Poly1> out;
    if (i == j) out = w.scaled(Poly1::variable());
    const Poly1 c(Rational(v.parity(i) ? -1 : 1));
    for (int s = 0; s < t.sites(); ++s) out = out + apply_one_slot(t, s, i, j, c, w);
    return out;
}

// ============================================================================
// Idempotent-image modules
// ============================================================================

namespace {

/// Columns of the idempotent acting on the full tensor power.
std::vector<SparseVec<Rational>> eu_columns(const SuperSpace& v, const Tableau& u) {
    const int d = static_cast<int>(tableau_contents(u).size());
    const TensorSpace t = TensorSpace::power(v, d);
    const GroupAlg<Rational> e = murphy_idempotent(u);
    std::vector<SparseVec<Rational>> cols;
    cols.reserve(static_cast<std::size_t>(t.dim()));
    for (long idx = 0; idx < t.dim(); ++idx)
        cols.push_back(act_groupalg(t, e, SparseVec<Rational>::unit(idx, Rational(1))));
    return cols;
}

Mat<Rational> columns_to_mat(long rows, const std::vector<SparseVec<Rational>>& cols) {
    Mat<Rational> m(rows, static_cast<long>(cols.size()));
    for (long j = 0; j < m.cols(); ++j)
        for (const auto& [idx, val] : cols[static_cast<std::size_t>(j)].terms())
            m.at(idx, j) = val;
    return m;
}

}  // namespace

RestrictedModule eu_module(const SuperSpace& v, const Tableau& u, Variant variant) {
    const std::vector<Rational> cont = content_shifts(u);
    const int d = static_cast<int>(cont.size());
    const int n = v.dim();
    const TensorSpace t = TensorSpace::power(v, d);

    const auto cols = eu_columns(v, u);
    Mat<Rational> img = columns_to_mat(t.dim(), cols);
    Mat<Rational> work = img;
    const std::vector<long> pivots = mat_rref(work);
    if (pivots.empty()) throw DomainError("idempotent image is zero on this space");
    std::vector<std::vector<Rational>> basis_cols;
    basis_cols.reserve(pivots.size());
    for (long p : pivots) basis_cols.push_back(img.column(p));

    RestrictedModule out;
    out.basis = Mat<Rational>::from_columns(t.dim(), basis_cols);
    out.dim = out.basis.cols();
    const SpanSolver solver(out.basis);

    // Ambient cleared action for the chosen variant.
    std::optional<GlTensorModule> coprod;
    std::optional<GlProductModule> prod;
    std::function<SparseVec<Poly1>(int, int, const SparseVec<Poly1>&)> act;
    if (variant == Variant::R) {
        std::vector<Rational> shifts;
        for (const Rational& c : cont) shifts.push_back(-c);
        coprod.emplace(gl_tensor_module(v, Variant::R, shifts));
        out.den = coprod->den;
        act = [&coprod](int i, int j, const SparseVec<Poly1>& w) {
            return coprod->rep.apply(i, j, w);
        };
    } else {
        prod.emplace(gl_product_module(v, Variant::Rprime, cont));
        out.den = prod->den;
        act = [&prod, &v, &t](int i, int j, const SparseVec<Poly1>& w) {
            return product_realization_apply(v, t, prod->factors, i, j, w);
        };
    }

    // Lift each basis column, apply every generator, and express the result in
    // subspace coordinates; coords() verifies the image stays in the subspace.
    std::vector<SparseVec<Poly1>> lifted;
    lifted.reserve(static_cast<std::size_t>(out.dim));
    for (long b = 0; b < out.dim; ++b) {
        SparseVec<Poly1> w;
        for (long r = 0; r < t.dim(); ++r)
            if (out.basis.at(r, b) != 0) w.add(r, Poly1(out.basis.at(r, b)));
        lifted.push_back(std::move(w));
    }
    out.mats.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat<Poly1> m(out.dim, out.dim);
            for (long b = 0; b < out.dim; ++b) {
                const std::vector<Poly1> x = solver.coords(act(i, j, lifted[b]).dense(t.dim()));
                for (long r = 0; r < out.dim; ++r) m.at(r, b) = x[static_cast<std::size_t>(r)];
            }
            out.mats.push_back(std::move(m));
        }
    return out;
}

long eu_rank(const SuperSpace& v, const Tableau& u) {
    const int d = static_cast<int>(tableau_contents(u).size());
    const TensorSpace t = TensorSpace::power(v, d);
    return mat_rank(columns_to_mat(t.dim(), eu_columns(v, u)));
}

bool schur_sergeev_rank_law(const SuperSpace& v, int d) {
    Int total = 0;
    for (const Partition& lam : partitions_of(d)) {
        const long r = eu_rank(v, first_standard_tableau(lam));
        const bool hook = fits_hook(lam, v.gl_m(), v.n());
        if ((r == 0) != !hook) return false;
        total += standard_tableau_count(lam) * Int(r);
    }
    Int expect = 1;
    for (int k = 0; k < d; ++k) expect *= Int(v.dim());
    return total == expect;
}

HighestWeight eu_highest_weight(const SuperSpace& v, const Tableau& u, Variant variant) {
    const RestrictedModule mod = eu_module(v, u, variant);
    const int n = v.dim();
    std::vector<Mat<Poly1>> uppers, diags;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j) uppers.push_back(mod.mats[static_cast<std::size_t>(i) * n + j]);
            if (i == j) diags.push_back(mod.mats[static_cast<std::size_t>(i) * n + j]);
        }
    return highest_weight_from_mats(uppers, diags, mod.den);
}

std::vector<RatFun> expected_weight_flat(int m, int n, const Partition& lam) {
    const Partition lc = conjugate_partition(lam);
    auto part = [](const Partition& p, int i) {
        return i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i) - 1] : 0;
    };
    const Poly1 u = Poly1::variable();
    std::vector<RatFun> out;
    for (int i = m; i >= 1; --i) {
        const long mu = std::max<long>(part(lam, i) - n, 0);
        out.emplace_back(linear_u(Rational(-mu), Rational(1)), u);
    }
    for (int j = n; j >= 1; --j) out.emplace_back(linear_u(Rational(part(lc, j)), Rational(1)), u);
    return out;
}

std::vector<RatFun> expected_weight_sharp(int m, int n, const Partition& lam) {
    const Partition lc = conjugate_partition(lam);
    auto part = [](const Partition& p, int i) {
        return i <= static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i) - 1] : 0;
    };
    const Poly1 u = Poly1::variable();
    std::vector<RatFun> out;
    for (int i = 1; i <= m; ++i) out.emplace_back(linear_u(Rational(part(lam, i)), Rational(1)), u);
    for (int j = 1; j <= n; ++j) {
        const long nu = std::max<long>(part(lc, j) - m, 0);
        out.emplace_back(linear_u(Rational(-nu), Rational(1)), u);
    }
    return out;
}

// ============================================================================
// Fusion identities over an auxiliary slot
// ============================================================================

namespace {

bool fusion_identity(const SuperSpace& v, const Tableau& u, bool companion) {
    const std::vector<Rational> cont = content_shifts(u);
    const int d = static_cast<int>(cont.size());
    const TensorSpace ext = TensorSpace::power(v, d + 1);
    const GroupAlg<Rational> e = shift_into_aux(murphy_idempotent(u), d);
    const Poly1 uu = Poly1::variable();

    // Aux factors in application order (first applied first) and the scalar
    // polynomial multiplying the right-hand side.
    std::vector<std::pair<int, TwoSlotOp<Poly1>>> chain;
    Poly1 scal(Rational(1));
    for (int a = 0; a < d; ++a) {
        const Poly1 x = companion ? linear_u(-cont[a], Rational(-1))   // -u - c_a
                                  : linear_u(-cont[a], Rational(1));   // u - c_a
        scal = scal * x;
        const TwoSlotOp<Poly1> r = companion ? rhat_gl_prime(v, x) : rhat_gl(v, x);
        chain.emplace_back(a, r);
    }
    if (!companion) std::reverse(chain.begin(), chain.end());  // rightmost factor first

    TwoSlotOp<Poly1> pq(v.dim(), v.dim());
    pq.axpy(Poly1(Rational(1)), companion ? op_block_gl(v) : op_swap(v));

    for (long col = 0; col < ext.dim(); ++col) {
        const SparseVec<Poly1> x = SparseVec<Poly1>::unit(col, Poly1(Rational(1)));
        SparseVec<Poly1> lhs = act_groupalg(ext, e, x);
        for (const auto& [site, op] : chain) lhs = apply_two_slot(ext, op, 0, 1 + site, lhs);
        lhs = lhs.scaled(uu);

        SparseVec<Poly1> rhs = x.scaled(uu);
        for (int a = 0; a < d; ++a) {
            const SparseVec<Poly1> y = apply_two_slot(ext, pq, 0, 1 + a, x);
            rhs = companion ? rhs + y : rhs - y;
        }
        rhs = act_groupalg(ext, e, rhs).scaled(scal);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace

bool kfus_holds(const SuperSpace& v, const Tableau& u) { return fusion_identity(v, u, false); }

bool kfustr_holds(const SuperSpace& v, const Tableau& u) { return fusion_identity(v, u, true); }

}  // namespace superyang
