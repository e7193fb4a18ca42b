#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superyang/groupalg.hpp"
#include "superyang/space.hpp"

using namespace superyang;

namespace {

GroupAlg<Rational> from_cycle_text(const std::string& one_based) {
    return GroupAlg<Rational>::from_perm(perm_parse(one_based), Rational(1));
}

}  // namespace

TEST_CASE("permutation basics") {
    CHECK(perm_parse("2,1,3") == PermVec{1, 0, 2});
    CHECK(perm_str(PermVec{1, 0, 2}) == "2,1,3");
    CHECK_THROWS_AS(perm_parse("1,1,2"), DomainError);
    CHECK_THROWS_AS(perm_parse("1,3"), DomainError);
    CHECK_THROWS_AS(perm_parse(""), DomainError);
    CHECK_THROWS_AS(perm_parse("1,x"), DomainError);

    const PermVec a = perm_parse("2,3,1");
    const PermVec b = perm_parse("2,1,3");
    // (a . b)(1): b sends 1 to 2, a sends 2 to 3
    CHECK(perm_compose(a, b) == perm_parse("3,2,1"));
    CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
    CHECK(perm_sign(a) == 1);
    CHECK(perm_sign(b) == -1);
    CHECK(perm_transposition(4, 0, 2) == perm_parse("3,2,1,4"));
}

TEST_CASE("partition generation and combinatorics") {
    const auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4[4] == Partition{1, 1, 1, 1});
    CHECK(partitions_of(6).size() == 11);

    CHECK(conjugate_partition({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate_partition({2, 2}) == Partition{2, 2});

    CHECK(hook_product({2, 1}) == 3);
    CHECK(hook_product({3, 1}) == 8);
    CHECK(hook_product({2, 2}) == 12);
    CHECK(standard_tableau_count({2, 1}) == 2);
    CHECK(standard_tableau_count({3, 2}) == 5);
    CHECK(standard_tableau_count({2, 1, 1}) == 3);

    Int sum_sq(0);
    for (const auto& lam : partitions_of(4)) {
        const Int f = standard_tableau_count(lam);
        sum_sq += f * f;
    }
    CHECK(sum_sq == 24);

    CHECK(fits_hook({3, 1}, 1, 2));
    CHECK_FALSE(fits_hook({3, 3}, 1, 2));
    CHECK(fits_hook({4}, 1, 1));
    CHECK_FALSE(fits_hook({2, 2}, 1, 1));
}

TEST_CASE("standard tableau enumeration and parsing") {
    const auto t21 = standard_tableaux({2, 1});
    REQUIRE(t21.size() == 2);
    CHECK(t21[0] == Tableau{{1, 2}, {3}});
    CHECK(t21[1] == Tableau{{1, 3}, {2}});
    CHECK(first_standard_tableau({2, 1}) == t21[0]);
    CHECK(standard_tableaux({3, 2}).size() == 5);
    CHECK(standard_tableaux({2, 2, 1}).size() == 5);

    CHECK(tableau_contents(Tableau{{1, 3}, {2}}) == std::vector<int>{0, -1, 1});
    CHECK(tableau_shape(Tableau{{1, 3}, {2}}) == Partition{2, 1});

    CHECK(tableau_parse("1,3;2") == Tableau{{1, 3}, {2}});
    CHECK(tableau_str(Tableau{{1, 3}, {2}}) == "1,3;2");
    CHECK_THROWS_AS(tableau_parse("1,2;3,4,5"), DomainError);  // not a partition shape
    CHECK_THROWS_AS(tableau_parse("1,2;2"), DomainError);      // duplicate entry
    CHECK_THROWS_AS(tableau_parse("2;1"), DomainError);        // column decreases
    CHECK_THROWS_AS(tableau_parse("1,4;2"), DomainError);      // entries not 1..d
}

TEST_CASE("group algebra convolution") {
    const auto s12 = from_cycle_text("2,1,3");
    const auto s23 = from_cycle_text("1,3,2");
    CHECK(s12 * s12 == GroupAlg<Rational>::one(3));
    // braid relation s12 s23 s12 = s23 s12 s23
    CHECK(s12 * s23 * s12 == s23 * s12 * s23);
    CHECK((s12 - s12).is_zero());
    CHECK(s12.lifted(4) == from_cycle_text("2,1,3,4"));
}

TEST_CASE("Jucys-Murphy elements commute") {
    const int d = 4;
    std::vector<GroupAlg<Rational>> x;
    for (int a = 1; a <= d; ++a) x.push_back(jm_element(d, a));
    CHECK(x[0].is_zero());
    CHECK(x[1].size() == 1);
    CHECK(x[3].size() == 3);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) CHECK(x[a] * x[b] == x[b] * x[a]);
}

TEST_CASE("interpolation idempotents for two boxes") {
    const GroupAlg<Rational> row = murphy_idempotent(Tableau{{1, 2}});
    CHECK(row.coeff(perm_identity(2)) == rat_of(1, 2));
    CHECK(row.coeff(perm_parse("2,1")) == rat_of(1, 2));
    const GroupAlg<Rational> col = murphy_idempotent(Tableau{{1}, {2}});
    CHECK(col.coeff(perm_identity(2)) == rat_of(1, 2));
    CHECK(col.coeff(perm_parse("2,1")) == rat_of(-1, 2));
    CHECK(row * col == GroupAlg<Rational>(2));
    CHECK(row + col == GroupAlg<Rational>::one(2));
}

TEST_CASE("interpolation idempotent frozen values for three boxes") {
    const GroupAlg<Rational> e = murphy_idempotent(Tableau{{1, 2}, {3}});
    CHECK(e.coeff(perm_identity(3)) == rat_of(1, 3));
    CHECK(e.coeff(perm_parse("2,1,3")) == rat_of(1, 3));
    CHECK(e.coeff(perm_parse("3,2,1")) == rat_of(-1, 6));
    CHECK(e.coeff(perm_parse("1,3,2")) == rat_of(-1, 6));
    CHECK(e.coeff(perm_parse("3,1,2")) == rat_of(-1, 6));
    CHECK(e.coeff(perm_parse("2,3,1")) == rat_of(-1, 6));
}

TEST_CASE("idempotent family: squares, orthogonality, completeness, spectra") {
    for (int d = 2; d <= 4; ++d) {
        std::vector<GroupAlg<Rational>> all;
        for (const auto& lam : partitions_of(d))
            for (const auto& u : standard_tableaux(lam)) {
                const auto e = murphy_idempotent(u);
                // Jucys-Murphy spectrum: x_a e = content_a(u) e
                const auto cont = tableau_contents(u);
                for (int a = 1; a <= d; ++a)
                    CHECK(jm_element(d, a) * e == e.scaled(Rational(cont[a - 1])));
                all.push_back(e);
            }
        GroupAlg<Rational> sum(d);
        for (std::size_t i = 0; i < all.size(); ++i) {
            sum = sum + all[i];
            for (std::size_t j = 0; j < all.size(); ++j) {
                const auto prod = all[i] * all[j];
                if (i == j)
                    CHECK(prod == all[i]);
                else
                    CHECK(prod.is_zero());
            }
        }
        CHECK(sum == GroupAlg<Rational>::one(d));
    }
}

TEST_CASE("fusion product formula reproduces the interpolation idempotents") {
    for (int d = 2; d <= 3; ++d)
        for (const auto& lam : partitions_of(d))
            for (const auto& u : standard_tableaux(lam))
                CHECK(fusion_idempotent(u, 4) == murphy_idempotent(u));
    CHECK_THROWS_AS(fusion_idempotent(first_standard_tableau({3, 2}), 4), ResourceBound);
}

TEST_CASE("symmetrizer and antisymmetrizer") {
    for (int d = 2; d <= 4; ++d) {
        const auto h = symmetrizer(d);
        const auto a = antisymmetrizer(d);
        CHECK(h * h == h);
        CHECK(a * a == a);
        CHECK((h * a).is_zero());
        CHECK((a * h).is_zero());
        // one-dimensional images: s h = h and s a = sgn(s) a for a generator
        const auto s = GroupAlg<Rational>::from_perm(perm_transposition(d, 0, 1), Rational(1));
        CHECK(s * h == h);
        CHECK(s * a == a.scaled(Rational(-1)));
    }
    // the two-box symmetrizer equals the row idempotent
    CHECK(symmetrizer(2) == murphy_idempotent(Tableau{{1, 2}}));
    CHECK(antisymmetrizer(2) == murphy_idempotent(Tableau{{1}, {2}}));
}

TEST_CASE("group algebra action on graded tensor powers") {
    // On a purely even space the antisymmetrizer kills symmetric tensors;
    // on a purely odd space it kills the antisymmetric combination instead.
    const SuperSpace even = SuperSpace::gl(2, 0);
    const SuperSpace odd = SuperSpace::gl(0, 2);
    const TensorSpace te = TensorSpace::power(even, 2);
    const TensorSpace to = TensorSpace::power(odd, 2);
    const auto a = antisymmetrizer(2);

    SparseVec<Rational> sym;
    sym.add(te.index_of({0, 1}), Rational(1));
    sym.add(te.index_of({1, 0}), Rational(1));
    CHECK(act_groupalg(te, a, sym).is_zero());

    SparseVec<Rational> odd_sym;
    odd_sym.add(to.index_of({0, 1}), Rational(1));
    odd_sym.add(to.index_of({1, 0}), Rational(1));
    CHECK(act_groupalg(to, a, odd_sym) == odd_sym);  // graded swap fixes it

    // rank of the symmetrizer on (C^{1|1})^{(x) 2} is 1+2+1 = ... the graded
    // symmetric square of C^{1|1} has dimension 2 (e00 and the mixed vector).
    const SuperSpace mixed = SuperSpace::gl(1, 1);
    const TensorSpace tm = TensorSpace::power(mixed, 2);
    const auto hmat = materialize_columns<Rational>(tm.dim(), [&](long j) {
        return act_groupalg(tm, symmetrizer(2), SparseVec<Rational>::unit(j));
    });
    CHECK(mat_rank(hmat) == 2);
    const auto amat = materialize_columns<Rational>(tm.dim(), [&](long j) {
        return act_groupalg(tm, antisymmetrizer(2), SparseVec<Rational>::unit(j));
    });
    CHECK(mat_rank(amat) == 2);
}
