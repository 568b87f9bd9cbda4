#pragma once

#include <vector>

#include "superschur/rational.hpp"

namespace superschur {

using Vec = std::vector<Rat>;

bool vec_is_zero(const Vec& v);
Vec vec_scaled(const Vec& v, const Rat& c);
/// y += c * x
void vec_axpy(Vec& y, const Rat& c, const Vec& x);

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec row(int i) const;
    void set_row(int i, const Vec& v);

    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& o) const;
    /// M * v
    Vec apply(const Vec& v) const;
    bool is_zero() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    RatMatrix mat;
    std::vector<int> pivot_cols;
};

/// Exact rank over the rationals (fraction-free elimination on the
/// denominator-cleared integer matrix).
int rank(const RatMatrix& m);

/// Reduced row echelon form with pivot columns, leftmost-pivot order.
RrefResult rref(const RatMatrix& m);

/// Basis of the right kernel {v : M v = 0}, one vector per free column,
/// in ascending free-column order. Size = cols - rank.
std::vector<Vec> nullspace(const RatMatrix& m);

/// Inverse of a square nonsingular matrix; throws std::invalid_argument otherwise.
RatMatrix inverse(const RatMatrix& m);

}  // namespace superschur
