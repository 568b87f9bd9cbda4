#include <doctest.h>

#include <set>

#include "superschur/catalog.hpp"
#include "superschur/subspace.hpp"
#include "superschur/superalgebra.hpp"

using namespace superschur;

namespace {

// Independent oracle: the cyclic sum of Definition-style graded Jacobi,
// evaluated directly on a raw structure-constant table.
Vec jacobi_cyclic_sum(const std::vector<std::vector<Vec>>& sc, int even_dim, int i, int j, int k) {
    const int d = static_cast<int>(sc.size());
    auto par = [&](int idx) { return idx < even_dim ? 0 : 1; };
    auto bracket_basis_vec = [&](int a, const Vec& v) {
        Vec out(d);
        for (int b = 0; b < d; ++b)
            if (!v[b].is_zero())
                for (int c = 0; c < d; ++c) out[c] += v[b] * sc[a][b][c];
        return out;
    };
    auto signed_term = [&](int x, int y, int z) {
        const Rat s(par(x) * par(z) ? -1 : 1);  // (-1)^{|x||z|}
        return vec_scaled(bracket_basis_vec(x, sc[y][z]), s);
    };
    Vec sum(d);
    vec_axpy(sum, Rat(1), signed_term(i, j, k));
    vec_axpy(sum, Rat(1), signed_term(j, k, i));
    vec_axpy(sum, Rat(1), signed_term(k, i, j));
    return sum;
}

std::vector<std::vector<Vec>> zero_table(int d) {
    return std::vector<std::vector<Vec>>(d, std::vector<Vec>(d, Vec(d)));
}

GradedSubspace span_of_basis(const SuperAlgebra& a, std::initializer_list<int> indices) {
    std::vector<Vec> rows;
    for (int i : indices) rows.push_back(a.basis_vector(i));
    return GradedSubspace::span(a.dims(), rows);
}

}  // namespace

TEST_CASE("bracket is the bilinear extension of the table") {
    const SuperAlgebra h1 = heisenberg_lie(1);  // x1, x2, z
    CHECK(h1.bracket(h1.basis_vector(0), h1.basis_vector(1)) == h1.basis_vector(2));
    CHECK(h1.bracket(h1.basis_vector(1), h1.basis_vector(0)) ==
          vec_scaled(h1.basis_vector(2), Rat(-1)));

    // [x1 + 2 x2, 3 x2] = 3 z
    Vec u = h1.basis_vector(0);
    u[1] = Rat(2);
    CHECK(h1.bracket(u, vec_scaled(h1.basis_vector(1), Rat(3))) ==
          vec_scaled(h1.basis_vector(2), Rat(3)));

    const SuperAlgebra ab = abelian(2, 1);
    CHECK(vec_is_zero(ab.bracket(ab.basis_vector(0), ab.basis_vector(2))));

    // odd-odd square in H_even(0,1): [y,y] = z with z spanning the even part
    const SuperAlgebra h01 = heisenberg_even(0, 1);
    CHECK(h01.bracket(h01.basis_vector(1), h01.basis_vector(1)) == h01.basis_vector(0));

    CHECK_THROWS_AS(h1.bracket(Vec(2), Vec(3)), std::invalid_argument);
}

TEST_CASE("validate accepts catalog algebras") {
    CHECK(heisenberg_even(1, 1).validate().ok());
    CHECK(heisenberg_odd(2).validate().ok());
    CHECK(abelian(0, 0).validate().ok());
    CHECK(nonabelian_11(NonAbelian11::solvable).validate().ok());
    CHECK(nonabelian_11(NonAbelian11::heisenberg).validate().ok());
}

TEST_CASE("validate reports antisymmetry violations with the witnessing triple") {
    auto sc = zero_table(3);
    sc[0][1][2] = Rat(1);
    sc[1][0][2] = Rat(1);  // should be -1 for an even pair
    const SuperAlgebra bad = SuperAlgebra::from_table({"e1", "e2", "e3"}, {}, sc);
    const ValidationReport report = bad.validate();
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations[0].kind == Violation::Kind::antisymmetry);
    CHECK(report.violations[0].where == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("graded Jacobi checked against direct evaluation of the cyclic sum") {
    SUBCASE("a genuine violator is reported at its triple") {
        // [e1,e2] = e3, [e2,e3] = e2: the cyclic sum at (1,2,3) is e3.
        auto sc = zero_table(3);
        sc[0][1][2] = Rat(1);
        sc[1][0][2] = Rat(-1);
        sc[1][2][1] = Rat(1);
        sc[2][1][1] = Rat(-1);
        CHECK_FALSE(vec_is_zero(jacobi_cyclic_sum(sc, 3, 0, 1, 2)));  // oracle agrees

        const SuperAlgebra bad = SuperAlgebra::from_table({"e1", "e2", "e3"}, {}, sc);
        const ValidationReport report = bad.validate();
        REQUIRE_FALSE(report.ok());
        CHECK(report.violations[0].kind == Violation::Kind::jacobi);
        CHECK(report.violations[0].where == std::array<int, 3>{0, 1, 2});
    }

    SUBCASE("a diagonalizable derivation table satisfies Jacobi") {
        // [e1,e2] = e1, [e2,e3] = e3: every cyclic sum vanishes, so this is
        // a (solvable) Lie algebra.
        auto sc = zero_table(3);
        sc[0][1][0] = Rat(1);
        sc[1][0][0] = Rat(-1);
        sc[1][2][2] = Rat(1);
        sc[2][1][2] = Rat(-1);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                for (int k = j; k < 3; ++k) CHECK(vec_is_zero(jacobi_cyclic_sum(sc, 3, i, j, k)));
        CHECK(SuperAlgebra::from_table({"e1", "e2", "e3"}, {}, sc).validate().ok());
    }

    SUBCASE("odd triples use the graded signs") {
        // [y,y] = x in H_even(0,1): the (y,y,y) sum needs the odd Koszul signs.
        const SuperAlgebra h01 = heisenberg_even(0, 1);
        auto sc = zero_table(2);
        sc[1][1][0] = Rat(1);
        CHECK(vec_is_zero(jacobi_cyclic_sum(sc, 1, 1, 1, 1)));
        CHECK(h01.validate().ok());
    }
}

TEST_CASE("builder completes the table by super antisymmetry") {
    SUBCASE("mirrored slots carry the Koszul sign") {
        const SuperAlgebra h = heisenberg_odd(1);  // even x1; odd y1, z: [x1,y1] = z
        CHECK(h.basis_bracket(0, 1) == h.basis_vector(2));
        CHECK(h.basis_bracket(1, 0) == vec_scaled(h.basis_vector(2), Rat(-1)));
        const SuperAlgebra h01 = heisenberg_even(0, 1);  // [y,y] = z, odd diagonal
        CHECK(h01.basis_bracket(1, 1) == h01.basis_vector(0));
    }

    SUBCASE("re-entering the completed canonical slots reproduces the algebra") {
        const SuperAlgebra a = heisenberg_even(1, 1);
        SuperAlgebra::Builder b({"x1", "x2", "z"}, {"y1"});
        for (int i = 0; i < a.dim(); ++i)
            for (int j = i; j < a.dim(); ++j)
                if (!vec_is_zero(a.basis_bracket(i, j))) b.set_bracket(i, j, a.basis_bracket(i, j));
        const SuperAlgebra rebuilt = b.build();
        CHECK(rebuilt == a);
        CHECK(rebuilt.validate().ok());
    }

    SUBCASE("double specification is rejected") {
        SuperAlgebra::Builder b({"a", "b"}, {});
        Vec v(2);
        b.set_bracket(0, 1, v);
        CHECK_THROWS_AS(b.set_bracket(1, 0, v), std::invalid_argument);
    }

    SUBCASE("nonzero even diagonal is rejected") {
        SuperAlgebra::Builder b({"a", "b"}, {});
        Vec v(2);
        v[1] = Rat(1);
        CHECK_THROWS_AS(b.set_bracket(0, 0, v), std::invalid_argument);
    }
}

TEST_CASE("commutator subspaces") {
    const SuperAlgebra h1 = heisenberg_lie(1);
    const GradedSubspace full = GradedSubspace::full(h1.dims());
    CHECK(commutator_subspace(h1, full, full) == span_of_basis(h1, {2}));
    CHECK(commutator_subspace(h1, full, full).dim() == Dims{1, 0});

    const SuperAlgebra ab = abelian(2, 2);
    CHECK(commutator_subspace(ab, GradedSubspace::full(ab.dims()), GradedSubspace::full(ab.dims()))
              .is_zero());

    const SuperAlgebra ho1 = heisenberg_odd(1);  // odd center
    CHECK(commutator_subspace(ho1, GradedSubspace::full(ho1.dims()),
                              GradedSubspace::full(ho1.dims()))
              .dim() == Dims{0, 1});
}

TEST_CASE("center and pair center") {
    for (auto [m, n] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{0, 2}}) {
        const SuperAlgebra h = heisenberg_even(m, n);
        CHECK(center(h) == span_of_basis(h, {2 * m}));  // span{z}
    }
    const SuperAlgebra ho = heisenberg_odd(2);
    CHECK(center(ho) == span_of_basis(ho, {ho.dim() - 1}));

    const SuperAlgebra ab = abelian(1, 2);
    const GradedSubspace n = span_of_basis(ab, {0, 1});
    CHECK(pair_center(ab, n) == n);

    const SuperAlgebra h1 = heisenberg_lie(1);
    CHECK(pair_center(h1, span_of_basis(h1, {2})) == span_of_basis(h1, {2}));
    CHECK(pair_center(h1, GradedSubspace::full(h1.dims())) == center(h1));
    CHECK_THROWS_AS(pair_center(h1, span_of_basis(h1, {0})), std::invalid_argument);

    // pair_center(A, N) = center(A) intersect N
    const SuperAlgebra sum = direct_sum(h1, abelian(1, 0));
    const GradedSubspace ideal = span_of_basis(sum, {2, 3});  // z and the abelian summand
    CHECK(pair_center(sum, ideal) == subspace_intersection(center(sum), ideal));
}

TEST_CASE("centralizer") {
    const SuperAlgebra h1 = heisenberg_lie(1);
    CHECK(centralizer(h1, h1.basis_vector(2)) == GradedSubspace::full(h1.dims()));
    CHECK(centralizer(h1, h1.basis_vector(0)) == span_of_basis(h1, {0, 2}));
    CHECK(centralizer(h1, h1.basis_vector(0)).contains(center(h1)));

    const SuperAlgebra ab = abelian(2, 1);
    CHECK(centralizer(ab, ab.basis_vector(1)) == GradedSubspace::full(ab.dims()));
}

TEST_CASE("lower central series and nilpotency class") {
    const SuperAlgebra h1 = heisenberg_lie(1);
    const auto series = lower_central_series(h1);
    REQUIRE(series.size() == 3);
    CHECK(series[0].dim() == Dims{3, 0});
    CHECK(series[1] == span_of_basis(h1, {2}));
    CHECK(series[2].is_zero());
    CHECK(nilpotency_class(h1) == 2);

    CHECK(nilpotency_class(abelian(2, 2)) == 1);
    CHECK(nilpotency_class(abelian(0, 0)) == 0);
    CHECK(nilpotency_class(heisenberg_odd(2)) == 2);

    const SuperAlgebra solvable = nonabelian_11(NonAbelian11::solvable);
    CHECK_FALSE(nilpotency_class(solvable).has_value());
    const auto stuck = lower_central_series(solvable);
    CHECK_FALSE(stuck.back().is_zero());
    CHECK(stuck.back() == span_of_basis(solvable, {1}));

    // series terms are graded ideals, each contained in the previous
    for (const SuperAlgebra& a : {heisenberg_even(1, 2), solvable}) {
        const auto terms = lower_central_series(a);
        for (size_t i = 0; i < terms.size(); ++i) {
            CHECK(is_graded_ideal(a, terms[i]));
            if (i) CHECK(terms[i - 1].contains(terms[i]));
        }
    }
}

TEST_CASE("subalgebra and ideal predicates") {
    const SuperAlgebra h1 = heisenberg_lie(1);
    CHECK(is_graded_ideal(h1, span_of_basis(h1, {2})));
    CHECK(is_subalgebra(h1, span_of_basis(h1, {0})));
    CHECK_FALSE(is_graded_ideal(h1, span_of_basis(h1, {0})));  // [x1,x2] = z escapes
    CHECK_FALSE(is_subalgebra(h1, span_of_basis(h1, {0, 1})));

    // ideals absorb: [N, L] inside N
    const GradedSubspace n = span_of_basis(h1, {2});
    CHECK(n.contains(commutator_subspace(h1, n, GradedSubspace::full(h1.dims()))));
}

TEST_CASE("quotient algebras") {
    const SuperAlgebra h1 = heisenberg_lie(1);
    const QuotientResult q = quotient(h1, span_of_basis(h1, {2}));
    CHECK(q.algebra.dims() == Dims{2, 0});
    CHECK(q.algebra.is_abelian());
    CHECK(q.section_indices == std::vector<int>{0, 1});

    const SuperAlgebra ho1 = heisenberg_odd(1);
    const QuotientResult q2 = quotient(ho1, span_of_basis(ho1, {2}));
    CHECK(q2.algebra.dims() == Dims{1, 1});
    CHECK(q2.algebra.is_abelian());

    const QuotientResult q3 = quotient(h1, GradedSubspace::full(h1.dims()));
    CHECK(q3.algebra.dims() == Dims{0, 0});

    CHECK_THROWS_AS(quotient(h1, span_of_basis(h1, {0})), std::invalid_argument);

    // dim quotient + dim ideal = dim algebra, componentwise
    const SuperAlgebra he12 = heisenberg_even(1, 2);
    for (const auto& term : lower_central_series(he12)) {
        const QuotientResult qq = quotient(he12, term);
        CHECK(qq.algebra.dims() + term.dim() == he12.dims());
        CHECK(qq.algebra.validate().ok());
    }
}

TEST_CASE("direct sums") {
    CHECK(direct_sum(abelian(1, 0), abelian(0, 1)) == abelian(1, 1));

    const SuperAlgebra h1 = heisenberg_lie(1);
    const SuperAlgebra sum = direct_sum(h1, abelian(1, 0));
    CHECK(sum.dims() == Dims{4, 0});
    CHECK(commutator_subspace(sum, GradedSubspace::full(sum.dims()),
                              GradedSubspace::full(sum.dims()))
              .dim() == Dims{1, 0});
    CHECK(sum.validate().ok());

    CHECK(direct_sum(heisenberg_even(1, 1), heisenberg_odd(1)).validate().ok());

    // colliding labels are disambiguated
    const SuperAlgebra twice = direct_sum(h1, h1);
    CHECK(twice.validate().ok());
    CHECK(twice.index_of("z"));
    CHECK(twice.index_of("z'"));

    // the zero algebra is a neutral summand
    CHECK(same_structure_constants(direct_sum(abelian(0, 0), h1), h1));
    CHECK(same_structure_constants(direct_sum(h1, abelian(0, 0)), h1));

    // renaming stays collision-free even when the suffixed name is taken
    const SuperAlgebra nested = direct_sum(twice, h1);
    std::set<std::string> labels(nested.names().begin(), nested.names().end());
    CHECK(labels.size() == static_cast<size_t>(nested.dim()));
    const SuperAlgebra b_side = direct_sum(abelian(1, 0), direct_sum(abelian(1, 0), abelian(1, 0)));
    std::set<std::string> b_labels(b_side.names().begin(), b_side.names().end());
    CHECK(b_labels.size() == static_cast<size_t>(b_side.dim()));
}

TEST_CASE("graded subspaces reject mixed-parity spans") {
    const SuperAlgebra a = abelian(1, 1);
    Vec mixed(2);
    mixed[0] = Rat(1);
    mixed[1] = Rat(1);
    CHECK_THROWS_AS(GradedSubspace::span(a.dims(), {mixed}), std::invalid_argument);
}
