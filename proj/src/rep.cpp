#include "superyang/rep.hpp"

#include <algorithm>
#include <string>

#include "superyang/errors.hpp"

namespace superyang {

// ============================================================================
// One-site builders
// ============================================================================

ClearedSite site_gl_vector(const SuperSpace& v, Variant variant, const Rational& shift) {
    if (v.kind() != SpaceKind::GL) throw DomainError("site_gl_vector expects a GL space");
    const int n = v.dim();
    const Poly1 den = Poly1({shift, Rational(1)});  // u + shift
    OneSiteRep<Poly1> rep(n);
    for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) rep.add(k, w, k, w, den);
    if (variant == Variant::R) {
        // t_{k,k2}(u) e_w = d_{k,k2} e_w - u^{-1} (-1)^{|k||k2|} d_{k,w} e_{k2}
        for (int k = 0; k < n; ++k)
            for (int k2 = 0; k2 < n; ++k2) {
                const int sgn = (v.parity(k) & v.parity(k2)) ? 1 : -1;
                rep.add(k, k, k2, k2, Poly1(Rational(sgn)));
            }
    } else {
        // t_{k,k2}(u) e_w = d_{k,k2} e_w + u^{-1} (-1)^{|k|} d_{k2,w} e_k
        for (int k = 0; k < n; ++k)
            for (int k2 = 0; k2 < n; ++k2) {
                const int sgn = v.parity(k) ? -1 : 1;
                rep.add(k, k2, k2, k, Poly1(Rational(sgn)));
            }
    }
    return ClearedSite{std::move(rep), den};
}

ClearedSite site_osp_vector(const SuperSpace& v, const Rational& shift) {
    if (!v.has_form()) throw DomainError("site_osp_vector expects an orthosymplectic space");
    const int n = v.dim();
    const Poly1 a = Poly1({shift, Rational(1)});                      // u + shift
    const Poly1 b = Poly1({shift + v.kappa(), Rational(1)});          // u + shift + kappa
    const Poly1 den = a * b;
    OneSiteRep<Poly1> rep(n);
    for (int k = 0; k < n; ++k)
        for (int w = 0; w < n; ++w) rep.add(k, w, k, w, den);
    for (int k = 0; k < n; ++k)
        for (int k2 = 0; k2 < n; ++k2) {
            // u^{-1} (-1)^{|k|} d_{k2,w} e_k
            const int s1 = v.parity(k) ? -1 : 1;
            rep.add(k, k2, k2, k, b.scaled(Rational(s1)));
            // -(u + kappa)^{-1} (-1)^{|k||k2|} tau_k tau_{k2} d_{k',w} e_{k2'};
            // s2 carries the leading minus folded into the parity sign
            const int s2 = ((v.parity(k) & v.parity(k2)) ? 1 : -1) * v.tau(k) * v.tau(k2);
            rep.add(k, v.prime(k), k2, v.prime(k2), a.scaled(Rational(s2)));
        }
    return ClearedSite{std::move(rep), den};
}

std::pair<TensorRep<Poly1>, Poly1> tensor_rep(const SuperSpace& v,
                                              const std::vector<ClearedSite>& sites) {
    std::vector<OneSiteRep<Poly1>> reps;
    Poly1 den(Rational(1));
    for (const auto& s : sites) {
        if (s.rep.dim() != v.dim()) throw DomainError("site dimension mismatch");
        reps.push_back(s.rep);
        den = den * s.den;
    }
    TensorSpace space = TensorSpace::power(v, static_cast<int>(sites.size()));
    return {TensorRep<Poly1>(v, std::move(space), std::move(reps)), den};
}

// ============================================================================
// Bivariate lifts
// ============================================================================

Poly2 poly2_in_u(const Poly1& p) {
    std::vector<Poly1> cs;
    cs.reserve(static_cast<std::size_t>(p.degree() + 1));
    for (long k = 0; k <= p.degree(); ++k) cs.emplace_back(p.coeff(k));
    return Poly2(std::move(cs));
}

Poly2 poly2_in_v(const Poly1& p) { return Poly2(p); }

namespace {
OneSiteRep<Poly2> lift_site(const OneSiteRep<Poly1>& s, Poly2 (*lift)(const Poly1&)) {
    OneSiteRep<Poly2> out(s.dim());
    for (int k = 0; k < s.dim(); ++k)
        for (int w = 0; w < s.dim(); ++w)
            for (const auto& e : s.at(k, w)) out.add(k, w, e.k2, e.w2, lift(e.coeff));
    return out;
}
}  // namespace

OneSiteRep<Poly2> lift_site_u(const OneSiteRep<Poly1>& s) { return lift_site(s, poly2_in_u); }
OneSiteRep<Poly2> lift_site_v(const OneSiteRep<Poly1>& s) { return lift_site(s, poly2_in_v); }

// ============================================================================
// Product realization over an auxiliary slot
// ============================================================================

SparseVec<Poly1> product_realization_apply(const SuperSpace& v, const TensorSpace& sites_space,
                                           const std::vector<AuxFactor>& factors, int i, int j,
                                           const SparseVec<Poly1>& w) {
    std::vector<SuperSpace> fs;
    fs.push_back(v);
    for (int a = 0; a < sites_space.sites(); ++a) fs.push_back(sites_space.factor(a));
    const TensorSpace ext(fs);
    const long mdim = sites_space.dim();

    SparseVec<Poly1> x;
    for (const auto& [idx, val] : w.terms()) x.add(static_cast<long>(j) * mdim + idx, val);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        x = apply_two_slot(ext, it->op, 0, 1 + it->site, x);

    SparseVec<Poly1> out;
    for (const auto& [idx, val] : x.terms())
        if (idx / mdim == i) out.add(idx % mdim, val);
    return out;
}

// ============================================================================
// Rational singular vectors and highest weights
// ============================================================================

Mat<Rational> stack_coefficients(const Mat<Poly1>& m) {
    long maxdeg = 0;
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c)
            maxdeg = std::max(maxdeg, static_cast<long>(m.at(r, c).degree()));
    Mat<Rational> out(m.rows() * (maxdeg + 1), m.cols());
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) {
            const Poly1& p = m.at(r, c);
            for (long k = 0; k <= p.degree(); ++k) out.at(k * m.rows() + r, c) = p.coeff(k);
        }
    return out;
}

Mat<Rational> joint_kernel(long dim, const std::vector<Mat<Poly1>>& mats) {
    Mat<Rational> basis = Mat<Rational>::identity(dim);
    for (const auto& m : mats) {
        if (basis.cols() == 0) break;
        // Restrict the matrix to the current candidate space, then stack
        // u-power coefficients and intersect with the new kernel.
        Mat<Poly1> mb(m.rows(), basis.cols());
        for (long c = 0; c < basis.cols(); ++c)
            for (long r = 0; r < m.rows(); ++r) {
                Poly1 acc;
                for (long k = 0; k < m.cols(); ++k) {
                    const Rational& bk = basis.at(k, c);
                    if (bk != 0) acc = acc + m.at(r, k).scaled(bk);
                }
                mb.at(r, c) = std::move(acc);
            }
        const auto ker = mat_kernel(stack_coefficients(mb));
        basis = basis * Mat<Rational>::from_columns(basis.cols(), ker);
    }
    return basis;
}

HighestWeight highest_weight_from_mats(const std::vector<Mat<Poly1>>& uppers,
                                       const std::vector<Mat<Poly1>>& diags, const Poly1& den) {
    if (diags.empty()) throw DomainError("no diagonal generators given");
    const long dim = diags.front().rows();
    const Mat<Rational> sing = joint_kernel(dim, uppers);
    HighestWeight hw;
    hw.singular_dim = sing.cols();
    if (sing.cols() != 1)
        throw VerificationError("rational singular space has dimension " +
                                std::to_string(sing.cols()) + ", expected a line");
    hw.vec = sing.column(0);
    long p0 = -1;
    for (long r = 0; r < dim; ++r)
        if (hw.vec[r] != 0) { p0 = r; break; }
    for (const auto& d : diags) {
        std::vector<Poly1> y(dim);
        for (long r = 0; r < dim; ++r) {
            Poly1 acc;
            for (long c = 0; c < dim; ++c)
                if (hw.vec[c] != 0) acc = acc + d.at(r, c).scaled(hw.vec[c]);
            y[r] = std::move(acc);
        }
        const Poly1 mu = y[p0].scaled(Rational(1) / hw.vec[p0]);
        for (long r = 0; r < dim; ++r)
            if (!(y[r] == mu.scaled(hw.vec[r])))
                throw VerificationError("diagonal generator is not scalar on the singular line");
        hw.lambda.emplace_back(mu, den);
    }
    return hw;
}

std::vector<Rational> dense_rational(const SparseVec<Rational>& v, long dim) {
    std::vector<Rational> out(static_cast<std::size_t>(dim), Rational(0));
    for (const auto& [idx, val] : v.terms()) out[static_cast<std::size_t>(idx)] = val;
    return out;
}

}  // namespace superyang
