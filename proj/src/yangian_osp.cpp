#include "superyang/yangian_osp.hpp"

#include <algorithm>
#include <utility>

#include "superyang/errors.hpp"
#include "superyang/groupalg.hpp"

namespace superyang {

namespace {

Poly1 lin(const Rational& c0) { return Poly1(std::vector<Rational>{c0, Rational(1)}); }

SparseVec<Poly1> lift_rational(const SparseVec<Rational>& v) {
    SparseVec<Poly1> out;
    for (const auto& [i, c] : v.terms()) out.add(i, Poly1(c));
    return out;
}

}  // namespace

OspTensorModule osp_tensor_module(const SuperSpace& v, const std::vector<Rational>& shifts) {
    if (!v.has_form()) throw DomainError("orthosymplectic module over a space without a form");
    std::vector<ClearedSite> sites;
    sites.reserve(shifts.size());
    for (const Rational& s : shifts) sites.push_back(site_osp_vector(v, s));
    auto built = tensor_rep(v, sites);
    return OspTensorModule{std::move(built.first), std::move(built.second)};
}

// ============================================================================
// Skew subspace and alternating vectors
// ============================================================================

SparseVec<Rational> w_vector(const SuperSpace& v, int k) {
    const int N = v.dim();
    if (k < 1 || k > N - 2) throw DomainError("skew vector label out of range");
    SparseVec<Rational> w;
    w.add(static_cast<long>(k), Rational(1));
    w.add(static_cast<long>(k) * N, Rational(-1));
    return w;
}

Mat<Rational> w_basis(const SuperSpace& v) {
    const int N = v.dim();
    const long dim = static_cast<long>(N) * N;
    std::vector<std::vector<Rational>> cols;
    cols.reserve(static_cast<std::size_t>(N) - 2);
    for (int k = 1; k <= N - 2; ++k) cols.push_back(dense_rational(w_vector(v, k), dim));
    return Mat<Rational>::from_columns(dim, cols);
}

OspTensorModule xi_ambient(const SuperSpace& v, int d) {
    std::vector<Rational> shifts;
    shifts.reserve(2 * static_cast<std::size_t>(d));
    for (int r = 1; r <= d; ++r) {
        shifts.push_back(Rational(-r));
        shifts.push_back(Rational(-r + 1));
    }
    return osp_tensor_module(v, shifts);
}

SparseVec<Poly1> xi_vector(const SuperSpace& v, int d) {
    const int N = v.dim();
    if (d < 1 || d > N - 2) throw DomainError("alternating degree out of range");
    SparseVec<Poly1> xi;
    PermVec word(d);
    for (int r = 0; r < d; ++r) word[r] = r;
    do {
        const int base = perm_sign(word);
        for (long mask = 0; mask < (1L << d); ++mask) {
            long idx = 0;
            int sg = base;
            for (int r = 0; r < d; ++r) {
                const int label = word[r] + 1;
                int a = 0, b = label;
                if ((mask >> r) & 1) {
                    a = label;
                    b = 0;
                    sg = -sg;
                }
                idx = (idx * N + a) * N + b;
            }
            xi.add(idx, Poly1(Rational(sg)));
        }
    } while (std::next_permutation(word.begin(), word.end()));
    return xi;
}

std::vector<RatFun> xi_weights(const SuperSpace& v, int d) {
    const OspTensorModule mod = xi_ambient(v, d);
    const SparseVec<Poly1> xi = xi_vector(v, d);
    auto act = [&](int i, int j, const SparseVec<Poly1>& w) { return mod.rep.apply(i, j, w); };
    return measure_weights(act, v.dim(), xi, mod.den);
}

std::vector<RatFun> xi_expected_prefix(int n, int d) {
    if (d < 1 || d > n) throw DomainError("alternating degree must satisfy 1 <= d <= n");
    std::vector<RatFun> out;
    out.reserve(static_cast<std::size_t>(n) + 2);
    out.emplace_back(lin(Rational(1)), lin(Rational(1 - d)));
    for (int i = 2; i <= d + 1; ++i) out.emplace_back(lin(Rational(-d)), lin(Rational(1 - d)));
    for (int i = d + 2; i <= n + 2; ++i) out.emplace_back(Rational(1));
    if (d == n) out.back() = RatFun(lin(Rational(-n)), lin(Rational(-n - 1)));
    return out;
}

bool w_module_matches(const SuperSpace& v) {
    if (v.kind() != SpaceKind::OSP) throw DomainError("skew subspace check needs the OSP kind");
    const int n = v.n();
    const int N = v.dim();
    const OspTensorModule mod = osp_tensor_module(v, {Rational(-1), Rational(0)});
    const ClearedSite inner = site_osp_vector(SuperSpace::osp0(n), Rational(0));
    // The ambient cleared denominator factors through the inner one; the
    // middle generator block then matches the inner table scaled by the
    // cofactor.
    const Poly1 factor = lin(Rational(-1)) * lin(Rational(-n));
    if (factor * inner.den != mod.den) return false;
    const Poly1 corner0 = poly_exact_div(mod.den * lin(Rational(1)), lin(Rational(0)));
    const Poly1 cornerN = poly_exact_div(mod.den * lin(Rational(-n - 2)), lin(Rational(-n - 1)));
    for (int k = 1; k <= N - 2; ++k) {
        const SparseVec<Poly1> wk = lift_rational(w_vector(v, k));
        if (mod.rep.apply(0, 0, wk) != wk.scaled(corner0)) return false;
        if (mod.rep.apply(N - 1, N - 1, wk) != wk.scaled(cornerN)) return false;
        // Raising border generators annihilate the subspace.
        for (int j = 1; j < N; ++j)
            if (!mod.rep.apply(0, j, wk).is_zero()) return false;
        for (int i = 0; i < N - 1; ++i)
            if (!mod.rep.apply(i, N - 1, wk).is_zero()) return false;
        for (int i = 1; i <= N - 2; ++i)
            for (int j = 1; j <= N - 2; ++j) {
                const SparseVec<Poly1> got = mod.rep.apply(i, j, wk);
                SparseVec<Poly1> expect;
                for (const auto& e : inner.rep.at(i - 1, k - 1))
                    if (e.k2 == j - 1)
                        expect.add_scaled(lift_rational(w_vector(v, e.w2 + 1)), factor * e.coeff);
                if (got != expect) return false;
            }
    }
    return true;
}

// ============================================================================
// Weight-tuple conditions
// ============================================================================

bool consistency_conditions_hold(const std::vector<RatFun>& lambda, int n) {
    const int N = 2 * n + 2;
    if (static_cast<int>(lambda.size()) != N) throw DomainError("weight tuple has wrong length");
    auto lam = [&](int i) -> const RatFun& { return lambda[static_cast<std::size_t>(i) - 1]; };
    for (int i = 1; i <= n; ++i) {
        const Rational a(n - i + 2);
        const RatFun lhs = lam(i) * lam(N + 1 - i).shifted(a);
        const RatFun rhs = lam(i + 1) * lam(N - i).shifted(a);
        if (lhs != rhs) return false;
    }
    return true;
}

bool completion_matches(const std::vector<RatFun>& lambda, int n) {
    const int N = 2 * n + 2;
    if (static_cast<int>(lambda.size()) != N) throw DomainError("weight tuple has wrong length");
    std::vector<RatFun> built(static_cast<std::size_t>(N));
    for (int i = 0; i < n + 2; ++i) built[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)];
    for (int i = n; i >= 1; --i) {
        const Rational back(-(n - i + 2));
        const std::size_t ip = static_cast<std::size_t>(N - i);        // 0-based index of i'
        const std::size_t i1p = static_cast<std::size_t>(N - i - 1);   // 0-based index of (i+1)'
        built[ip] = built[static_cast<std::size_t>(i)].shifted(back) * built[i1p] /
                    built[static_cast<std::size_t>(i) - 1].shifted(back);
    }
    for (int i = 0; i < N; ++i)
        if (built[static_cast<std::size_t>(i)] != lambda[static_cast<std::size_t>(i)]) return false;
    return true;
}

// ============================================================================
// Central series
// ============================================================================

namespace {

int central_sign(const SuperSpace& v, int k, int j) {
    const int ex = (v.parity(k) & v.parity(j)) ^ v.parity(j);
    return v.tau(k) * v.tau(j) * (ex ? -1 : 1);
}

/// All rows C_ij w for fixed j, sharing the inner applications across i.
std::vector<SparseVec<Poly1>> central_series_column(const OspTensorModule& shifted,
                                                    const OspTensorModule& plain, int j,
                                                    const SparseVec<Poly1>& w) {
    const SuperSpace& v = plain.rep.gen_space();
    const int N = v.dim();
    std::vector<SparseVec<Poly1>> inners(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k)
        inners[static_cast<std::size_t>(k)] = plain.rep.apply(v.prime(j), v.prime(k), w);
    std::vector<SparseVec<Poly1>> rows(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            if (inners[static_cast<std::size_t>(k)].is_zero()) continue;
            const SparseVec<Poly1> y = shifted.rep.apply(i, k, inners[static_cast<std::size_t>(k)]);
            rows[static_cast<std::size_t>(i)].add_scaled(y, Poly1(Rational(central_sign(v, k, j))));
        }
    return rows;
}

}  // namespace

OspTensorModule central_series_companion(const SuperSpace& v, const std::vector<Rational>& shifts) {
    const Rational minus_kappa = Rational(0) - v.kappa();
    std::vector<Rational> sh;
    sh.reserve(shifts.size());
    for (const Rational& s : shifts) sh.push_back(s + minus_kappa);
    return osp_tensor_module(v, sh);
}

SparseVec<Poly1> central_series_apply(const OspTensorModule& shifted, const OspTensorModule& plain,
                                      int i, int j, const SparseVec<Poly1>& w) {
    const SuperSpace& v = plain.rep.gen_space();
    const int N = v.dim();
    SparseVec<Poly1> out;
    for (int k = 0; k < N; ++k) {
        const SparseVec<Poly1> inner = plain.rep.apply(v.prime(j), v.prime(k), w);
        if (inner.is_zero()) continue;
        const SparseVec<Poly1> y = shifted.rep.apply(i, k, inner);
        out.add_scaled(y, Poly1(Rational(central_sign(v, k, j))));
    }
    return out;
}

bool central_series_matrix_identity(const SuperSpace& v, const std::vector<Rational>& shifts) {
    const OspTensorModule plain = osp_tensor_module(v, shifts);
    const OspTensorModule shifted = central_series_companion(v, shifts);
    const int N = v.dim();
    const long dim = plain.rep.space().dim();
    for (long b = 0; b < dim; ++b) {
        const SparseVec<Poly1> w = SparseVec<Poly1>::unit(b);
        SparseVec<Poly1> ref;
        for (int j = 0; j < N; ++j) {
            const auto rows = central_series_column(shifted, plain, j, w);
            for (int i = 0; i < N; ++i)
                if (i != j && !rows[static_cast<std::size_t>(i)].is_zero()) return false;
            if (j == 0)
                ref = rows[0];
            else if (rows[static_cast<std::size_t>(j)] != ref)
                return false;
        }
    }
    return true;
}

RatFun central_series_scalar(const SuperSpace& v, const std::vector<Rational>& shifts,
                             const SparseVec<Poly1>& xi) {
    if (xi.is_zero()) throw DomainError("central scalar on the zero vector");
    const OspTensorModule plain = osp_tensor_module(v, shifts);
    const OspTensorModule shifted = central_series_companion(v, shifts);
    const int N = v.dim();
    const auto& [p0, c0] = *xi.terms().begin();
    if (c0.degree() > 0) throw DomainError("central scalar expects constant coordinates");
    Poly1 chat;
    bool have = false;
    for (int j = 0; j < N; ++j) {
        const auto rows = central_series_column(shifted, plain, j, xi);
        for (int i = 0; i < N; ++i) {
            if (i != j) {
                if (!rows[static_cast<std::size_t>(i)].is_zero())
                    throw VerificationError("central series acts off-diagonally on the vector");
                continue;
            }
            const Poly1 mu = rows[static_cast<std::size_t>(i)].coeff(p0).scaled(
                Rational(1) / c0.coeff(0));
            if (rows[static_cast<std::size_t>(i)] != xi.scaled(mu))
                throw VerificationError("central series is not scalar on the vector");
            if (!have) {
                chat = mu;
                have = true;
            } else if (mu != chat) {
                throw VerificationError("central series diagonals disagree on the vector");
            }
        }
    }
    return RatFun(chat, plain.den * shifted.den);
}

TensorRep<Rational> evaluate_rep(const TensorRep<Poly1>& rep, const Rational& x) {
    std::vector<OneSiteRep<Rational>> sites;
    const int d = rep.space().sites();
    sites.reserve(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        const int dim = rep.space().factor(a).dim();
        OneSiteRep<Rational> s(dim);
        for (int k = 0; k < rep.gen_dim(); ++k)
            for (int w = 0; w < dim; ++w)
                for (const auto& e : rep.site(a).at(k, w)) s.add(k, w, e.k2, e.w2, e.coeff.eval(x));
        sites.push_back(std::move(s));
    }
    return TensorRep<Rational>(rep.gen_space(), rep.space(), std::move(sites));
}

bool central_series_value_matches(const SuperSpace& v, const std::vector<Rational>& shifts,
                                  const SparseVec<Poly1>& xi, const RatFun& predicted) {
    const OspTensorModule plain = osp_tensor_module(v, shifts);
    const OspTensorModule shifted = central_series_companion(v, shifts);
    const RatFun cleared = predicted * RatFun(plain.den * shifted.den);
    if (!cleared.is_polynomial()) return false;
    const Poly1& chat = cleared.as_poly();
    SparseVec<Rational> xr;
    for (const auto& [idx, c] : xi.terms()) {
        if (c.degree() > 0) throw DomainError("sampled central check expects constant coordinates");
        xr.add(idx, c.coeff(0));
    }
    const int N = v.dim();
    const int points = plain.den.degree() + shifted.den.degree() + 1;
    for (int pt = 0; pt < points; ++pt) {
        const Rational x(pt);
        const TensorRep<Rational> evp = evaluate_rep(plain.rep, x);
        const TensorRep<Rational> evs = evaluate_rep(shifted.rep, x);
        const Rational cx = chat.eval(x);
        const SparseVec<Rational> want_diag = xr.scaled(cx);
        for (int j = 0; j < N; ++j) {
            std::vector<SparseVec<Rational>> inners(static_cast<std::size_t>(N));
            for (int k = 0; k < N; ++k)
                inners[static_cast<std::size_t>(k)] = evp.apply(v.prime(j), v.prime(k), xr);
            for (int i = 0; i < N; ++i) {
                SparseVec<Rational> row;
                for (int k = 0; k < N; ++k) {
                    if (inners[static_cast<std::size_t>(k)].is_zero()) continue;
                    row.add_scaled(evs.apply(i, k, inners[static_cast<std::size_t>(k)]),
                                   Rational(central_sign(v, k, j)));
                }
                if (row != (i == j ? want_diag : SparseVec<Rational>())) return false;
            }
        }
    }
    return true;
}

// ============================================================================
// First-order embedding
// ============================================================================

bool embedding_matches(const SuperSpace& v) {
    const int N = v.dim();
    const ClearedSite site = site_osp_vector(v, Rational(0));
    const Rational kap = v.kappa();
    // t_ij(u) = delta_ij + t1_ij / u + O(u^{-2}); with the monic quadratic
    // denominator u(u + kappa), t1_ij is the u-coefficient of the cleared
    // table minus delta_ij * kappa on the diagonal.
    std::vector<Mat<Rational>> t1(static_cast<std::size_t>(N) * N, Mat<Rational>(N, N));
    for (int i = 0; i < N; ++i)
        for (int w = 0; w < N; ++w)
            for (const auto& e : site.rep.at(i, w)) {
                Mat<Rational>& m = t1[static_cast<std::size_t>(i) * N + e.k2];
                m.at(e.w2, w) = m.at(e.w2, w) + e.coeff.coeff(1);
            }
    for (int i = 0; i < N; ++i) {
        Mat<Rational>& m = t1[static_cast<std::size_t>(i) * N + i];
        for (int w = 0; w < N; ++w) m.at(w, w) = m.at(w, w) - kap;
    }
    const Rational half = Rational(1) / Rational(2);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const int pi = v.parity(i), pj = v.parity(j);
            const int s = v.tau(i) * v.tau(j) * (((pj + pi * pj) & 1) ? -1 : 1);
            Mat<Rational> g =
                (t1[static_cast<std::size_t>(i) * N + j] -
                 t1[static_cast<std::size_t>(v.prime(j)) * N + v.prime(i)].scaled(Rational(s)))
                    .scaled(half);
            if (pi) g = g.scaled(Rational(-1));
            Mat<Rational> f(N, N);
            f.at(i, j) = Rational(1);
            const int fs = v.tau(i) * v.tau(j) * (((pi * pj + pi) & 1) ? -1 : 1);
            f.at(v.prime(j), v.prime(i)) = f.at(v.prime(j), v.prime(i)) - Rational(fs);
            if (!(g - f).is_zero()) return false;
        }
    return true;
}

}  // namespace superyang
