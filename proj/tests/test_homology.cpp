#include <doctest.h>

#include <algorithm>

#include "superschur/bounds.hpp"
#include "superschur/catalog.hpp"
#include "superschur/homology.hpp"
#include "superschur/randomgen.hpp"
#include "superschur/subspace.hpp"

using namespace superschur;

TEST_CASE("wedge basis sizes") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            const Dims d{m, n};
            CHECK(wedge2_size(d) == ((m + n) * (m + n) + (n - m)) / 2);
            const int expect3 = m * (m - 1) * (m - 2) / 6 + m * (m - 1) / 2 * n +
                                m * (n + 1) * n / 2 + (n + 2) * (n + 1) * n / 6;
            CHECK(wedge3_size(d) == expect3);
        }
}

TEST_CASE("wedge2 canonicalization signs") {
    const SuperAlgebra a = heisenberg_even(1, 1);  // even x1,x2,z; odd y1
    const Wedge2Basis w2(a.dims());

    // (e2, e1) -> -(e1 ^ e2)
    Vec v = canonicalize_wedge2(a, w2, a.basis_vector(1), a.basis_vector(0));
    CHECK(v[w2.index_of(0, 1)] == Rat(-1));

    // (f1, f1) -> +(f1 v f1)
    v = canonicalize_wedge2(a, w2, a.basis_vector(3), a.basis_vector(3));
    CHECK(v[w2.index_of(3, 3)] == Rat(1));

    // (f1, e1) -> -(e1 ^ f1)
    v = canonicalize_wedge2(a, w2, a.basis_vector(3), a.basis_vector(0));
    CHECK(v[w2.index_of(0, 3)] == Rat(-1));

    // even diagonal collapses
    v = canonicalize_wedge2(a, w2, a.basis_vector(0), a.basis_vector(0));
    CHECK(vec_is_zero(v));

    Vec mixed(a.dim());
    mixed[0] = Rat(1);
    mixed[3] = Rat(1);
    CHECK_THROWS_AS(canonicalize_wedge2(a, w2, mixed, a.basis_vector(0)), std::invalid_argument);
}

TEST_CASE("boundary maps on the named algebras") {
    SUBCASE("abelian: both maps vanish") {
        const SuperAlgebra a = abelian(2, 1);
        CHECK(build_d2(a).is_zero());
        CHECK(build_d3(a).is_zero());
    }

    SUBCASE("H(1): d2 has rank 1 and d3 vanishes") {
        const SuperAlgebra h1 = heisenberg_lie(1);
        const Wedge2Basis w2(h1.dims());
        const RatMatrix d2 = build_d2(h1);
        CHECK(rank(d2) == 1);
        // the x1^x2 column is z
        CHECK(d2.at(2, w2.index_of(0, 1)) == Rat(1));
        CHECK(build_d3(h1).is_zero());
        CHECK(multiplier_dim(h1).dim_multiplier == 3 - 1 - 0);
    }

    SUBCASE("H_even(0,1): d3(y v y v y) = 3 (z ^ y)") {
        const SuperAlgebra h01 = heisenberg_even(0, 1);  // even z at 0, odd y at 1
        const Wedge2Basis w2(h01.dims());
        const RatMatrix d2 = build_d2(h01);
        CHECK(d2.at(0, w2.index_of(1, 1)) == Rat(1));  // column of y v y is z
        CHECK(vec_is_zero(d2.transposed().row(w2.index_of(0, 1))));  // column of z ^ y is 0

        const RatMatrix d3 = build_d3(h01);
        CHECK(rank(d3) == 1);
        // single fff generator: y v y v y, last column
        const int col = d3.cols() - 1;
        CHECK(d3.at(w2.index_of(0, 1), col) == Rat(3));
        CHECK(multiplier_dim(h01).dim_multiplier == 2 - 1 - 1);
    }
}

TEST_CASE("multiplier dimensions match the closed forms") {
    CHECK(multiplier_dim(abelian(1, 1)).dim_multiplier == 2);
    CHECK(multiplier_dim(heisenberg_even(1, 1)).dim_multiplier == 3);
    CHECK(multiplier_dim(heisenberg_odd(2)).dim_multiplier == 7);
    CHECK(multiplier_dim(heisenberg_lie(2)).dim_multiplier == 5);
    CHECK(multiplier_dim(abelian(0, 0)).dim_multiplier == 0);

    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            CHECK(multiplier_dim(abelian(m, n)).dim_multiplier == nayak_bound(m, n));
}

TEST_CASE("chain complex identities over catalog and random algebras") {
    std::vector<SuperAlgebra> population;
    for (const CatalogEntry& e : enumerate_catalog(4)) population.push_back(e.algebra);
    Rng rng(3);
    for (int i = 0; i < 15; ++i) population.push_back(random_valid_algebra(rng, {3, 3}));

    for (const SuperAlgebra& a : population) {
        REQUIRE(a.validate().ok());
        const RatMatrix d2 = build_d2(a);
        const RatMatrix d3 = build_d3(a);
        CHECK((d2 * d3).is_zero());
        const GradedSubspace full = GradedSubspace::full(a.dims());
        CHECK(rank(d2) == commutator_subspace(a, full, full).dim().total());
        CHECK(multiplier_dim(a).dim_multiplier <= nayak_bound(a.dims().even, a.dims().odd));
    }
}

TEST_CASE("multiplier is invariant under basis permutations within parity blocks") {
    const SuperAlgebra a = heisenberg_even(1, 2);
    const int expected = multiplier_dim(a).dim_multiplier;

    // permute the even part cyclically and swap the two odd generators
    std::vector<int> perm{2, 0, 1, 4, 3};
    std::vector<std::vector<Vec>> table(a.dim(), std::vector<Vec>(a.dim(), Vec(a.dim())));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                table[perm[i]][perm[j]][perm[k]] = a.basis_bracket(i, j)[k];
    std::vector<std::string> even(3), odd(2);
    for (int i = 0; i < a.dim(); ++i) {
        if (i < 3)
            even[perm[i]] = a.name(i);
        else
            odd[perm[i] - 3] = a.name(i);
    }
    const SuperAlgebra permuted = SuperAlgebra::from_table(even, odd, table);
    REQUIRE(permuted.validate().ok());
    CHECK(multiplier_dim(permuted).dim_multiplier == expected);

    // and under a unimodular change of basis
    Rng rng(5);
    const SuperAlgebra changed = random_basis_change(a, rng);
    REQUIRE(changed.validate().ok());
    CHECK(multiplier_dim(changed).dim_multiplier == expected);
}

TEST_CASE("quotients by ideals with non-unit echelon bases") {
    // rewrite H_even(1,1) on a skew basis: the center basis picks up fractions
    Rng rng(17);
    const SuperAlgebra a = random_basis_change(heisenberg_even(1, 1), rng);
    REQUIRE(a.validate().ok());
    const GradedSubspace z = center(a);
    CHECK(z.dim() == Dims{1, 0});

    const QuotientResult q = quotient(a, z);
    CHECK(q.algebra.validate().ok());
    CHECK(q.algebra.dims() == Dims{2, 1});
    CHECK(q.algebra.is_abelian());
    CHECK(multiplier_dim(q.algebra).dim_multiplier == nayak_bound(2, 1));
}

TEST_CASE("equality with the Nayak bound forces abelian") {
    for (const CatalogEntry& e : enumerate_catalog(5)) {
        const MultiplierReport rep = multiplier_dim(e.algebra);
        CHECK((rep.defect_t == 0) == e.algebra.is_abelian());
    }
}
