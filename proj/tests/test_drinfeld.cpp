#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "superyang/drinfeld.hpp"
#include "superyang/errors.hpp"

using namespace superyang;

namespace {

Poly1 lin(const Rational& c0) { return Poly1({c0, Rational(1)}); }

Poly1 one() { return ScalarTraits<Poly1>::one(); }

RatFun frac(long a, long b) { return RatFun(lin(Rational(a)), lin(Rational(b))); }

Poly1 from_roots(const std::vector<Rational>& roots) {
    Poly1 p = one();
    for (const Rational& r : roots) p = p * lin(Rational(-r));
    return p;
}

/// gcd by intersecting rational root multisets: an independent second path
/// next to the Euclidean algorithm inside the library.
Poly1 root_multiset_gcd(const Poly1& a, const Poly1& b) {
    const RootList ra = rational_roots(a);
    const RootList rb = rational_roots(b);
    REQUIRE(ra.remainder.degree() == 0);
    REQUIRE(rb.remainder.degree() == 0);
    Poly1 g = one();
    for (const auto& [r, m] : ra.roots)
        for (const auto& [r2, m2] : rb.roots)
            if (r == r2)
                for (int i = 0; i < std::min(m, m2); ++i) g = g * lin(Rational(-r));
    return g;
}

}  // namespace

TEST_CASE("shift-ratio solver on pinned inputs") {
    CHECK(solve_shift_ratio(RatFun(Rational(1)), 1) == one());
    CHECK(solve_shift_ratio(RatFun(Rational(1)), 2) == one());
    // (u-d+1)/(u-d) with step 1 has the solution u-d.
    CHECK(solve_shift_ratio(frac(-1, -2), 1) == lin(Rational(-2)));
    // (u-n+1)/(u-n-1) with step 2 has the solution u-n-1 (here n = 2).
    CHECK(solve_shift_ratio(frac(-1, -3), 2) == lin(Rational(-3)));
    // A length-three string: (u+1)/(u-2) peels to u(u-1)(u-2) at step 1.
    CHECK(solve_shift_ratio(frac(1, -2), 1) ==
          from_roots({Rational(0), Rational(1), Rational(2)}));
    // The same ratio at step 2 has no integer chain.
    CHECK_THROWS_AS(solve_shift_ratio(frac(1, -2), 2), NoSolution);
    // Doubled roots: (u+1)^2/u^2 solves to u^2.
    CHECK(solve_shift_ratio(RatFun(lin(Rational(1)) * lin(Rational(1)),
                                   Poly1::variable() * Poly1::variable()),
                            1) == Poly1::variable() * Poly1::variable());
    // Wrong direction, non-monic value, and degree mismatch are verdicts.
    CHECK_THROWS_AS(solve_shift_ratio(frac(-1, 0), 1), NoSolution);
    CHECK_THROWS_AS(solve_shift_ratio(RatFun(Rational(2)), 1), NoSolution);
    CHECK_THROWS_AS(solve_shift_ratio(RatFun(lin(Rational(1)) * lin(Rational(2)), lin(Rational(0))), 1),
                    NoSolution);
    // Irrational factors are rejected with their own error.
    CHECK_THROWS_AS(solve_shift_ratio(RatFun(Poly1({Rational(-2), Rational(0), Rational(1)}),
                                             Poly1({Rational(-3), Rational(0), Rational(1)})),
                                      1),
                    IrrationalRoots);
}

TEST_CASE("string peeling inverts the shift quotient exhaustively") {
    const std::vector<Rational> pool = {Rational(-2), Rational(-1), Rational(0),
                                        Rational(1, 2), Rational(1), Rational(3)};
    std::vector<std::vector<Rational>> sets;
    std::vector<Rational> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        sets.push_back(cur);
        if (cur.size() == 4) return;
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    REQUIRE(sets.size() == 210);  // multisets of size <= 4 from six roots
    for (const auto& roots : sets) {
        const Poly1 p = from_roots(roots);
        for (int step : {1, 2}) {
            CAPTURE(poly_str(p));
            CAPTURE(step);
            CHECK(solve_shift_ratio(RatFun(p.var_shifted(Rational(step)), p), step) == p);
        }
    }
}

TEST_CASE("tuples read off pinned reduced weights") {
    // Vector representation of osp(2|2): ((u+1)/u, 1, 1).
    {
        const auto t = drinfeld_from_weight({frac(1, 0), RatFun(Rational(1)), RatFun(Rational(1))});
        CHECK(t.qbar == lin(Rational(1)));
        CHECK(t.q == Poly1::variable());
        CHECK(t.p == std::vector<Poly1>{one()});
    }
    // Alternating vector d=2 in rank 3: ((u+1)/(u-1), (u-2)/(u-1), (u-2)/(u-1), 1, 1).
    {
        const auto t = drinfeld_from_weight(
            {frac(1, -1), frac(-2, -1), frac(-2, -1), RatFun(Rational(1)), RatFun(Rational(1))});
        CHECK(t.qbar == lin(Rational(1)));
        CHECK(t.q == lin(Rational(-2)));
        CHECK(t.p == std::vector<Poly1>{one(), lin(Rational(-2)), one()});
    }
    // Alternating vector d=n=2: ((u+1)/(u-1), (u-2)/(u-1), (u-2)/(u-1), (u-2)/(u-3)).
    {
        const auto t =
            drinfeld_from_weight({frac(1, -1), frac(-2, -1), frac(-2, -1), frac(-2, -3)});
        CHECK(t.qbar == lin(Rational(1)));
        CHECK(t.q == lin(Rational(-2)));
        CHECK(t.p == std::vector<Poly1>{one(), lin(Rational(-3))});
    }
    // A weight violating the dominance chain is a NoSolution verdict.
    CHECK_THROWS_AS(
        drinfeld_from_weight({RatFun(Rational(1)), RatFun(Rational(1)), frac(-1, 0), RatFun(Rational(1))}),
        NoSolution);
    CHECK_THROWS_AS(drinfeld_from_weight({RatFun(Rational(1)), RatFun(Rational(1)),
                                          RatFun(Poly1({Rational(-2), Rational(0), Rational(1)}),
                                                 Poly1({Rational(-3), Rational(0), Rational(1)}))}),
                    IrrationalRoots);
}

TEST_CASE("canonical weight representative and round trips") {
    // (u+5, u, 1, 1) maps to lambda = ((u+5)/u, 1, 1, 1).
    DrinfeldTuple t;
    t.qbar = lin(Rational(5));
    t.q = Poly1::variable();
    t.p = {one(), one()};
    const auto lambda = weight_from_drinfeld(t);
    REQUIRE(lambda.size() == 4);
    CHECK(lambda[0] == frac(5, 0));
    for (int i = 1; i < 4; ++i) CHECK(lambda[static_cast<std::size_t>(i)] == RatFun(Rational(1)));
    CHECK(weight_from_drinfeld(ones_tuple(3)) ==
          std::vector<RatFun>(5, RatFun(Rational(1))));
    // Round trip over every corpus tuple (all have coprime first pairs).
    for (const auto& [a, b] : transition_corpus()) {
        CHECK(drinfeld_from_weight(weight_from_drinfeld(a)) == a);
        CHECK(drinfeld_from_weight(weight_from_drinfeld(b)) == b);
    }
}

TEST_CASE("tensor transition on the fixed corpus with an independent gcd") {
    const auto corpus = transition_corpus();
    REQUIRE(corpus.size() == 20);
    for (const auto& [a, b] : corpus) {
        REQUIRE(a.n() == b.n());
        REQUIRE_NOTHROW(require_monic_tuple(a));
        REQUIRE_NOTHROW(require_monic_tuple(b));
        const DrinfeldTuple got = tensor_transition(a, b);
        const Poly1 qbar = a.qbar * b.qbar;
        const Poly1 q = a.q * b.q;
        const Poly1 d = root_multiset_gcd(qbar, q);
        CHECK(got.qbar == poly_exact_div(qbar, d));
        CHECK(got.q == poly_exact_div(q, d));
        REQUIRE(got.p.size() == a.p.size());
        for (std::size_t i = 0; i < a.p.size(); ++i) CHECK(got.p[i] == a.p[i] * b.p[i]);
        CHECK(tensor_transition(b, a) == got);
        // The all-ones tuple is a two-sided identity on reduced tuples.
        CHECK(tensor_transition(a, ones_tuple(a.n())) == a);
        CHECK(tensor_transition(ones_tuple(b.n()), b) == b);
    }
    // The first pair is the documented cancellation (u+1,u) x (u,u-1) -> (u+1,u-1).
    const DrinfeldTuple first = tensor_transition(corpus[0].first, corpus[0].second);
    CHECK(first.qbar == lin(Rational(1)));
    CHECK(first.q == lin(Rational(-1)));
    // Associativity over every same-rank triple drawn from the corpus heads.
    std::vector<DrinfeldTuple> tuples;
    for (const auto& [a, b] : corpus) {
        tuples.push_back(a);
        tuples.push_back(b);
    }
    int checked = 0;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = i + 1; j < tuples.size() && checked < 60; ++j) {
            if (tuples[i].n() != tuples[j].n()) continue;
            const std::size_t k = (i + j) % tuples.size();
            if (tuples[k].n() != tuples[i].n()) continue;
            CHECK(tensor_transition(tensor_transition(tuples[i], tuples[j]), tuples[k]) ==
                  tensor_transition(tuples[i], tensor_transition(tuples[j], tuples[k])));
            ++checked;
        }
    CHECK(checked == 60);
    CHECK_THROWS_AS(tensor_transition(ones_tuple(1), ones_tuple(2)), DomainError);
}

TEST_CASE("shift automorphism on tuples") {
    DrinfeldTuple t;
    t.qbar = lin(Rational(3));
    t.q = Poly1::variable();
    t.p = {lin(Rational(-1))};
    const DrinfeldTuple s = shift_tuple(t, Rational(2));
    CHECK(s.qbar == lin(Rational(5)));
    CHECK(s.q == lin(Rational(2)));
    CHECK(s.p == std::vector<Poly1>{lin(Rational(1))});
    CHECK(shift_tuple(t, Rational(0)) == t);
    CHECK(shift_tuple(shift_tuple(t, Rational(7, 2)), Rational(-7, 2)) == t);
    // Shifting the tuple shifts the canonical weight entrywise.
    const auto lam = weight_from_drinfeld(t);
    const auto lam_s = weight_from_drinfeld(s);
    REQUIRE(lam.size() == lam_s.size());
    for (std::size_t i = 0; i < lam.size(); ++i) CHECK(lam_s[i] == lam[i].shifted(Rational(2)));
}

TEST_CASE("classification normalization of the first pair") {
    DrinfeldTuple t;
    t.qbar = Poly1::variable() * lin(Rational(1));
    t.q = Poly1::variable() * lin(Rational(-1));
    t.p = {one()};
    const DrinfeldTuple r = y_classification_normalize(t);
    CHECK(r.qbar == lin(Rational(1)));
    CHECK(r.q == lin(Rational(-1)));
    CHECK(r.p == t.p);
    CHECK(y_classification_normalize(r) == r);
    DrinfeldTuple bad;
    bad.qbar = lin(Rational(1)) * lin(Rational(2));
    bad.q = lin(Rational(3));
    bad.p = {one()};
    CHECK_THROWS_AS(y_classification_normalize(bad), DegreeMismatch);
    DrinfeldTuple nonmonic = t;
    nonmonic.qbar = t.qbar.scaled(Rational(2));
    CHECK_THROWS_AS(y_classification_normalize(nonmonic), DomainError);
}
