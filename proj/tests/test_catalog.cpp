#include <doctest.h>

#include <set>

#include "superschur/bounds.hpp"
#include "superschur/catalog.hpp"
#include "superschur/homology.hpp"
#include "superschur/subspace.hpp"

using namespace superschur;

TEST_CASE("family constructors") {
    CHECK(abelian(0, 0).dim() == 0);
    CHECK(abelian(2, 3).dims() == Dims{2, 3});
    CHECK(heisenberg_lie(2).dims() == Dims{5, 0});
    CHECK(heisenberg_even(1, 2).dims() == Dims{3, 2});
    CHECK(heisenberg_odd(2).dims() == Dims{2, 3});
    CHECK(heisenberg_even(1, 0) == heisenberg_lie(1));
    CHECK(heisenberg_even(3, 0) == heisenberg_lie(3));

    CHECK_THROWS_AS(heisenberg_even(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(heisenberg_odd(0), std::invalid_argument);
    CHECK_THROWS_AS(heisenberg_lie(0), std::invalid_argument);
    CHECK_THROWS_AS(abelian(-1, 0), std::invalid_argument);
}

TEST_CASE("the heisenberg property holds mechanically") {
    for (const SuperAlgebra& h : {heisenberg_lie(2), heisenberg_even(1, 1), heisenberg_even(0, 2),
                                  heisenberg_odd(1), heisenberg_odd(3)}) {
        const GradedSubspace full = GradedSubspace::full(h.dims());
        const GradedSubspace derived = commutator_subspace(h, full, full);
        CHECK(derived == center(h));
        CHECK(derived.dim().total() == 1);
        CHECK(nilpotency_class(h) == 2);
    }
}

TEST_CASE("nonabelian (1|1) algebras") {
    const SuperAlgebra solvable = nonabelian_11(NonAbelian11::solvable);
    CHECK_FALSE(nilpotency_class(solvable).has_value());
    CHECK(center(solvable).is_zero());

    const SuperAlgebra heis = nonabelian_11(NonAbelian11::heisenberg);
    CHECK(multiplier_dim(heis).dim_multiplier == 0);
    const GradedSubspace full = GradedSubspace::full(heis.dims());
    const GradedSubspace derived = commutator_subspace(heis, full, full);
    CHECK(derived == center(heis));
    CHECK(derived.dim() == Dims{1, 0});
    CHECK(same_structure_constants(heis, heisenberg_even(0, 1)));
}

TEST_CASE("catalog enumeration") {
    const auto entries = enumerate_catalog(3);
    std::set<std::string> ids;
    for (const CatalogEntry& e : entries) {
        CHECK(e.algebra.validate().ok());
        CHECK(e.algebra.dim() <= 3);
        ids.insert(e.id);
    }
    for (const char* expected :
         {"abelian(2|0)", "abelian(1|1)", "abelian(0|2)", "H_even(0,1)", "solvable(1|1)",
          "H_even(1,0)", "H_odd(1)", "H_even(0,2)", "sum(abelian(1|0),abelian(0|1))"})
        CHECK_MESSAGE(ids.count(expected) == 1, expected);

    // deterministic order
    const auto again = enumerate_catalog(3);
    REQUIRE(again.size() == entries.size());
    for (size_t i = 0; i < entries.size(); ++i) CHECK(again[i].id == entries[i].id);
}

TEST_CASE("expected multiplier dimensions are reproduced") {
    int with_expectation = 0;
    for (const CatalogEntry& e : enumerate_catalog(5)) {
        if (!e.expected_multiplier) continue;
        ++with_expectation;
        CHECK_MESSAGE(multiplier_dim(e.algebra).dim_multiplier == *e.expected_multiplier, e.id);
    }
    CHECK(with_expectation > 10);
}
