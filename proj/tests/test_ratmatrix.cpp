#include <doctest.h>

#include <random>

#include "superschur/ratmatrix.hpp"

using namespace superschur;

namespace {

RatMatrix from_ints(std::vector<std::vector<long>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
    return m;
}

RatMatrix random_matrix(std::mt19937& eng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(num(eng), den(eng));
    return m;
}

}  // namespace

TEST_CASE("rank on small matrices") {
    CHECK(rank(RatMatrix::identity(3)) == 3);
    CHECK(rank(RatMatrix(4, 7)) == 0);
    CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(RatMatrix(0, 5)) == 0);
    CHECK(rank(RatMatrix(5, 0)) == 0);
}

TEST_CASE("rref examples") {
    auto r = rref(RatMatrix::identity(3));
    CHECK(r.mat == RatMatrix::identity(3));
    CHECK(r.pivot_cols == std::vector<int>{0, 1, 2});

    r = rref(from_ints({{0, 1}, {0, 2}}));
    CHECK(r.mat == from_ints({{0, 1}, {0, 0}}));
    CHECK(r.pivot_cols == std::vector<int>{1});

    r = rref(from_ints({{2, 4}}));
    CHECK(r.mat.at(0, 0) == Rat(1));
    CHECK(r.mat.at(0, 1) == Rat(2));
}

TEST_CASE("nullspace examples") {
    CHECK(nullspace(RatMatrix::identity(4)).empty());
    CHECK(nullspace(RatMatrix(2, 3)).size() == 3);

    auto basis = nullspace(from_ints({{1, 1}}));
    REQUIRE(basis.size() == 1);
    // proportional to (1, -1)
    CHECK(basis[0][0] * Rat(-1) == basis[0][1]);
}

TEST_CASE("inverse") {
    RatMatrix m = from_ints({{2, 1}, {1, 1}});
    CHECK(inverse(m) * m == RatMatrix::identity(2));
    CHECK_THROWS_AS(inverse(from_ints({{1, 2}, {2, 4}})), std::invalid_argument);
}

TEST_CASE("randomized kernel properties") {
    std::mt19937 eng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int rows = 1 + trial % 6, cols = 1 + (trial * 5) % 7;
        RatMatrix m = random_matrix(eng, rows, cols);

        CHECK(rank(m) == rank(m.transposed()));

        const auto kernel = nullspace(m);
        CHECK(static_cast<int>(kernel.size()) == cols - rank(m));
        for (const Vec& v : kernel) CHECK(vec_is_zero(m.apply(v)));

        const auto r = rref(m);
        CHECK(rank(r.mat) == rank(m));
        CHECK(rref(r.mat).mat == r.mat);  // idempotent
    }
}
