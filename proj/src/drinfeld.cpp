#include "superyang/drinfeld.hpp"

#include <cstddef>
#include <string>

#include "superyang/errors.hpp"
#include "superyang/rational.hpp"

namespace superyang {

namespace {

bool is_monic(const Poly1& p) { return !p.is_zero() && p.lc() == Rational(1); }

/// Root multiset of a fully rational polynomial, expanded by multiplicity in
/// increasing order; IrrationalRoots if a nonconstant rootless factor remains.
std::vector<Rational> expanded_roots(const Poly1& p, const char* side) {
    const RootList rl = rational_roots(p);
    if (rl.remainder.degree() > 0)
        throw IrrationalRoots(std::string(side) + " has the irrational factor " +
                              poly_str(rl.remainder));
    std::vector<Rational> out;
    for (const auto& [root, mult] : rl.roots)
        for (int i = 0; i < mult; ++i) out.push_back(root);
    return out;
}

Poly1 linear_root(const Rational& r) { return Poly1({Rational(-r), Rational(1)}); }

}  // namespace

DrinfeldTuple ones_tuple(int n) {
    if (n < 0) throw DomainError("rank must be nonnegative");
    DrinfeldTuple t;
    t.qbar = ScalarTraits<Poly1>::one();
    t.q = ScalarTraits<Poly1>::one();
    t.p.assign(static_cast<std::size_t>(n), ScalarTraits<Poly1>::one());
    return t;
}

void require_monic_tuple(const DrinfeldTuple& t) {
    if (!is_monic(t.qbar) || !is_monic(t.q))
        throw DomainError("tuple components must be monic");
    for (const Poly1& pi : t.p)
        if (!is_monic(pi)) throw DomainError("tuple components must be monic");
}

Poly1 solve_shift_ratio(const RatFun& ratio, int step) {
    if (step <= 0) throw DomainError("shift step must be positive");
    if (ratio.is_zero()) throw NoSolution("ratio is zero");
    const Poly1& a = ratio.num();
    const Poly1& b = ratio.den();
    if (a.degree() != b.degree() || !is_monic(a))
        throw NoSolution("ratio is not a quotient of monic polynomials of equal degree");
    const std::vector<Rational> ra = expanded_roots(a, "numerator");
    const std::vector<Rational> rb = expanded_roots(b, "denominator");
    const Rational s(step);
    std::vector<bool> used(ra.size(), false);
    Poly1 p = ScalarTraits<Poly1>::one();
    for (const Rational& broot : rb) {
        bool matched = false;
        for (std::size_t i = 0; i < ra.size() && !matched; ++i) {
            if (used[i]) continue;
            const Rational diff((broot - ra[i]) / s);
            if (!rat_is_integer(diff) || diff <= 0) continue;
            used[i] = true;
            matched = true;
            for (Rational x(ra[i] + s);; x += s) {
                p = p * linear_root(x);
                if (x == broot) break;
            }
        }
        if (!matched)
            throw NoSolution("no admissible root string ends at " + rat_str(broot));
    }
    if (RatFun(p.var_shifted(Rational(step)), p) != ratio)
        throw VerificationError("shift-ratio solution failed its defining equation");
    return p;
}

DrinfeldTuple drinfeld_from_weight(const std::vector<RatFun>& lambda) {
    if (lambda.size() < 3)
        throw DomainError("a reduced weight needs at least three entries");
    const int n = static_cast<int>(lambda.size()) - 2;
    for (const RatFun& l : lambda)
        if (l.is_zero()) throw DomainError("weight entries must be nonzero");
    DrinfeldTuple t;
    const RatFun first = lambda[0] / lambda[1];
    expanded_roots(first.num(), "numerator");
    expanded_roots(first.den(), "denominator");
    t.qbar = poly_monic(first.num());
    t.q = first.den();
    t.p.reserve(static_cast<std::size_t>(n));
    for (int i = 2; i <= n + 1; ++i) {
        const int step = (i == n + 1) ? 2 : 1;
        t.p.push_back(solve_shift_ratio(lambda[static_cast<std::size_t>(i)] /
                                            lambda[static_cast<std::size_t>(i - 1)],
                                        step));
    }
    return t;
}

std::vector<RatFun> weight_from_drinfeld(const DrinfeldTuple& t) {
    require_monic_tuple(t);
    const int n = t.n();
    std::vector<RatFun> lambda;
    lambda.reserve(static_cast<std::size_t>(n) + 2);
    lambda.emplace_back(t.qbar, t.q);
    lambda.emplace_back(Rational(1));
    for (int i = 2; i <= n + 1; ++i) {
        const int step = (i == n + 1) ? 2 : 1;
        const Poly1& pi = t.p[static_cast<std::size_t>(i - 2)];
        lambda.push_back(lambda.back() * RatFun(pi.var_shifted(Rational(step)), pi));
    }
    return lambda;
}

DrinfeldTuple tensor_transition(const DrinfeldTuple& a, const DrinfeldTuple& b) {
    require_monic_tuple(a);
    require_monic_tuple(b);
    if (a.n() != b.n()) throw DomainError("tuples have different ranks");
    const Poly1 qbar = a.qbar * b.qbar;
    const Poly1 q = a.q * b.q;
    const Poly1 d = poly_gcd(qbar, q);
    DrinfeldTuple out;
    out.qbar = poly_exact_div(qbar, d);
    out.q = poly_exact_div(q, d);
    out.p.reserve(a.p.size());
    for (std::size_t i = 0; i < a.p.size(); ++i) out.p.push_back(a.p[i] * b.p[i]);
    return out;
}

DrinfeldTuple shift_tuple(const DrinfeldTuple& t, const Rational& a) {
    require_monic_tuple(t);
    DrinfeldTuple out;
    out.qbar = t.qbar.var_shifted(a);
    out.q = t.q.var_shifted(a);
    out.p.reserve(t.p.size());
    for (const Poly1& pi : t.p) out.p.push_back(pi.var_shifted(a));
    return out;
}

DrinfeldTuple y_classification_normalize(const DrinfeldTuple& t) {
    require_monic_tuple(t);
    const Poly1 g = poly_gcd(t.qbar, t.q);
    DrinfeldTuple out = t;
    out.qbar = poly_exact_div(t.qbar, g);
    out.q = poly_exact_div(t.q, g);
    if (out.qbar.degree() != out.q.degree())
        throw DegreeMismatch("reduced pair has degrees " + std::to_string(out.qbar.degree()) +
                             " and " + std::to_string(out.q.degree()));
    return out;
}

namespace {

/// Assembles a monic tuple from root lists (numerators of the roots as
/// written; a half denotes the rational h/2).
DrinfeldTuple from_roots(const std::vector<Rational>& qbar, const std::vector<Rational>& q,
                         const std::vector<std::vector<Rational>>& ps) {
    DrinfeldTuple t;
    t.qbar = ScalarTraits<Poly1>::one();
    t.q = ScalarTraits<Poly1>::one();
    for (const Rational& r : qbar) t.qbar = t.qbar * linear_root(r);
    for (const Rational& r : q) t.q = t.q * linear_root(r);
    for (const auto& roots : ps) {
        Poly1 pi = ScalarTraits<Poly1>::one();
        for (const Rational& r : roots) pi = pi * linear_root(r);
        t.p.push_back(pi);
    }
    return t;
}

}  // namespace

std::vector<std::pair<DrinfeldTuple, DrinfeldTuple>> transition_corpus() {
    const Rational h(1, 2);
    std::vector<std::pair<DrinfeldTuple, DrinfeldTuple>> out;
    auto add = [&](const DrinfeldTuple& a, const DrinfeldTuple& b) { out.emplace_back(a, b); };
    // Rank 1: coprime pair with one cross cancellation.
    add(from_roots({-1}, {0}, {{}}), from_roots({0}, {1}, {{}}));
    // Rank 1: identity partner.
    add(from_roots({-1}, {0}, {{2}}), ones_tuple(1));
    // Rank 1: full cancellation of the first pair.
    add(from_roots({-2}, {0}, {{1}}), from_roots({0}, {-2}, {{1}}));
    // Rank 1: repeated roots meeting single roots.
    add(from_roots({0, 0}, {1, 1}, {{3}}), from_roots({1}, {0}, {{3}}));
    // Rank 1: half-integer roots, disjoint.
    add(from_roots({-h}, {h}, {{}}), from_roots({3 * h}, {5 * h}, {{-h}}));
    // Rank 1: half-integer cancellation.
    add(from_roots({h}, {1}, {{}}), from_roots({2}, {h}, {{h, h}}));
    // Rank 1: deeper multiplicities.
    add(from_roots({0, 0, 0}, {1, 2, 3}, {{}}), from_roots({1, 2}, {0, 0}, {{}}));
    // Rank 1: shared P roots (the P entries multiply, never cancel).
    add(from_roots({-1}, {2}, {{4}}), from_roots({2}, {-1}, {{4}}));
    // Rank 1: degree-zero first pair against a full pair.
    add(from_roots({}, {}, {{7}}), from_roots({-3}, {4}, {{7}}));
    // Rank 1: negative and positive roots mixed, partial overlap.
    add(from_roots({-2, 1}, {0, 3}, {{0}}), from_roots({0, 3}, {-2, 5}, {{1}}));
    // Rank 2: coprime everywhere.
    add(from_roots({-1}, {0}, {{1}, {}}), from_roots({-2}, {5}, {{}, {2}}));
    // Rank 2: cancellation in both directions.
    add(from_roots({0, 1}, {2, 3}, {{}, {}}), from_roots({2}, {0}, {{1}, {1}}));
    // Rank 2: the alternating-vector tuples of the rank-2 algebra.
    add(from_roots({-1}, {1}, {{1}, {}}), from_roots({-1}, {2}, {{}, {3}}));
    // Rank 2: repeated cross factors.
    add(from_roots({4, 4}, {0}, {{}, {}}), from_roots({0, 0}, {4}, {{2, 3}, {}}));
    // Rank 2: half-integers in P components.
    add(from_roots({h}, {-h}, {{3 * h}, {h}}), from_roots({-h}, {h}, {{3 * h}, {}}));
    // Rank 2: everything cancels down to constants.
    add(from_roots({6}, {-6}, {{}, {}}), from_roots({-6}, {6}, {{}, {}}));
    // Rank 3: coprime long tuples.
    add(from_roots({-1}, {0}, {{1}, {2}, {3}}), from_roots({7}, {8}, {{}, {}, {}}));
    // Rank 3: overlap with multiplicity two on one side only.
    add(from_roots({0, 0, 5}, {1, 1, 2}, {{}, {}, {}}), from_roots({1}, {0}, {{4}, {}, {4}}));
    // Rank 3: the alternating-vector tuples of the rank-3 algebra.
    add(from_roots({-1}, {2}, {{}, {2}, {}}), from_roots({-1}, {3}, {{}, {}, {4}}));
    // Rank 3: dense cancellations with repeated and rational roots.
    add(from_roots({h, 1, 1}, {0, 2, 2}, {{0}, {}, {1}}),
        from_roots({2, 2}, {1, h}, {{0}, {}, {1}}));
    return out;
}

}  // namespace superyang
