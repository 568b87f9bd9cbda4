#include "superschur/ratmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace superschur {

bool vec_is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vec vec_scaled(const Vec& v, const Rat& c) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
    return out;
}

void vec_axpy(Vec& y, const Rat& c, const Vec& x) {
    if (y.size() != x.size()) throw std::invalid_argument("vec_axpy: length mismatch");
    if (c.is_zero()) return;
    for (size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += c * x[i];
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    a_.assign(static_cast<size_t>(rows) * cols, Rat());
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
    RatMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

Vec RatMatrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

void RatMatrix::set_row(int i, const Vec& v) {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("set_row: length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(k, j).is_zero()) p.at(i, j) += aik * o.at(k, j);
        }
    return p;
}

Vec RatMatrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply: length mismatch");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row-major integer copy of m with denominators cleared per row.
std::vector<mpz_class> cleared_int_rows(const RatMatrix& m) {
    std::vector<mpz_class> z(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            z[static_cast<size_t>(i) * m.cols() + j] = x.num() * (l / x.den());
        }
    }
    return z;
}

// Bareiss forward elimination in place. Pivot choice: leftmost nonzero
// column, first nonzero row. Returns pivot columns.
std::vector<int> bareiss_forward(std::vector<mpz_class>& z, int rows, int cols) {
    auto e = [&](int i, int j) -> mpz_class& { return z[static_cast<size_t>(i) * cols + j]; };
    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (e(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(e(r, j), e(pr, j));
        const mpz_class piv = e(r, c);
        for (int i = r + 1; i < rows; ++i) {
            const mpz_class f = e(i, c);
            for (int j = c; j < cols; ++j) {
                mpz_class t = piv * e(i, j) - f * e(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e(i, j) = std::move(t);
            }
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<mpz_class> z = cleared_int_rows(m);
    return static_cast<int>(bareiss_forward(z, m.rows(), m.cols()).size());
}

RrefResult rref(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {m, {}};
    std::vector<mpz_class> z = cleared_int_rows(m);
    const int cols = m.cols();
    std::vector<int> pivots = bareiss_forward(z, m.rows(), cols);
    const int r = static_cast<int>(pivots.size());

    // Normalize the echelon rows back to rationals and eliminate above pivots.
    RatMatrix out(m.rows(), cols);
    for (int i = 0; i < r; ++i) {
        const mpz_class& piv = z[static_cast<size_t>(i) * cols + pivots[i]];
        for (int j = pivots[i]; j < cols; ++j)
            out.at(i, j) = Rat(z[static_cast<size_t>(i) * cols + j], piv);
    }
    for (int i = r - 1; i >= 0; --i)
        for (int k = 0; k < i; ++k) {
            const Rat f = out.at(k, pivots[i]);
            if (f.is_zero()) continue;
            for (int j = pivots[i]; j < cols; ++j)
                out.at(k, j) -= f * out.at(i, j);
        }
    return {std::move(out), std::move(pivots)};
}

std::vector<Vec> nullspace(const RatMatrix& m) {
    if (m.cols() == 0) return {};
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rat(1);
        for (size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[r.pivot_cols[k]] = -r.mat.at(static_cast<int>(k), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    RrefResult r = rref(aug);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(r.pivot_cols.size()) <= i || r.pivot_cols[i] != i)
            throw std::invalid_argument("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

}  // namespace superschur
