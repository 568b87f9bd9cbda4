#include "superschur/subspace.hpp"

#include <set>
#include <stdexcept>

namespace superschur {

namespace {

std::optional<Parity> support_parity(const Vec& v, int even_dim) {
    bool has_even = false, has_odd = false;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) (static_cast<int>(i) < even_dim ? has_even : has_odd) = true;
    if (has_even == has_odd) return std::nullopt;
    return has_even ? Parity::even : Parity::odd;
}

std::vector<Vec> echelonize(const std::vector<Vec>& rows, int width) {
    if (rows.empty()) return {};
    RrefResult r = rref(RatMatrix::from_rows(rows, width));
    std::vector<Vec> out;
    for (size_t i = 0; i < r.pivot_cols.size(); ++i) out.push_back(r.mat.row(static_cast<int>(i)));
    return out;
}

// Reduces v against RREF rows in place.
void reduce_by(Vec& v, const std::vector<Vec>& rows, const std::vector<int>& pivots) {
    for (size_t k = 0; k < rows.size(); ++k) {
        const Rat c = v[pivots[k]];
        if (!c.is_zero()) vec_axpy(v, -c, rows[k]);
    }
}

std::vector<int> row_pivots(const std::vector<Vec>& rows) {
    std::vector<int> p;
    for (const Vec& r : rows) {
        int j = 0;
        while (j < static_cast<int>(r.size()) && r[j].is_zero()) ++j;
        p.push_back(j);
    }
    return p;
}

}  // namespace

GradedSubspace GradedSubspace::zero(Dims ambient) {
    GradedSubspace s;
    s.ambient_ = ambient;
    return s;
}

GradedSubspace GradedSubspace::full(Dims ambient) {
    GradedSubspace s;
    s.ambient_ = ambient;
    const int d = ambient.total();
    for (int i = 0; i < d; ++i) {
        Vec v(d);
        v[i] = Rat(1);
        (i < ambient.even ? s.even_ : s.odd_).push_back(std::move(v));
    }
    return s;
}

GradedSubspace GradedSubspace::span(Dims ambient, const std::vector<Vec>& vectors) {
    const int d = ambient.total();
    std::vector<Vec> even_rows, odd_rows;
    for (const Vec& v : vectors) {
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("span: vector length does not match ambient dimension");
        if (vec_is_zero(v)) continue;
        auto p = support_parity(v, ambient.even);
        if (!p) throw std::invalid_argument("span: basis vector is not homogeneous");
        (*p == Parity::even ? even_rows : odd_rows).push_back(v);
    }
    GradedSubspace s;
    s.ambient_ = ambient;
    s.even_ = echelonize(even_rows, d);
    s.odd_ = echelonize(odd_rows, d);
    return s;
}

std::vector<Vec> GradedSubspace::basis() const {
    std::vector<Vec> out = even_;
    out.insert(out.end(), odd_.begin(), odd_.end());
    return out;
}

bool GradedSubspace::contains(const Vec& v) const {
    Vec r = v;
    reduce_by(r, even_, row_pivots(even_));
    reduce_by(r, odd_, row_pivots(odd_));
    return vec_is_zero(r);
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
    for (const Vec& v : other.even_)
        if (!contains(v)) return false;
    for (const Vec& v : other.odd_)
        if (!contains(v)) return false;
    return true;
}

std::optional<Vec> GradedSubspace::coordinates(const Vec& v) const {
    std::vector<Vec> rows = basis();
    std::vector<int> pivots = row_pivots(rows);
    Vec r = v;
    Vec coords(rows.size());
    for (size_t k = 0; k < rows.size(); ++k) {
        coords[k] = r[pivots[k]];
        if (!coords[k].is_zero()) vec_axpy(r, -coords[k], rows[k]);
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return coords;
}

std::vector<int> GradedSubspace::pivot_indices() const {
    std::vector<int> p = row_pivots(even_);
    std::vector<int> po = row_pivots(odd_);
    p.insert(p.end(), po.begin(), po.end());
    return p;
}

GradedSubspace subspace_sum(const GradedSubspace& u, const GradedSubspace& w) {
    if (u.ambient() != w.ambient())
        throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
    std::vector<Vec> rows = u.basis();
    std::vector<Vec> wr = w.basis();
    rows.insert(rows.end(), wr.begin(), wr.end());
    return GradedSubspace::span(u.ambient(), rows);
}

GradedSubspace subspace_intersection(const GradedSubspace& u, const GradedSubspace& w) {
    if (u.ambient() != w.ambient())
        throw std::invalid_argument("subspace_intersection: ambient dimension mismatch");
    const int d = u.ambient().total();
    std::vector<Vec> found;
    auto block = [&](const std::vector<Vec>& ub, const std::vector<Vec>& wb) {
        if (ub.empty() || wb.empty()) return;
        // Columns: coefficients on U-rows then W-rows; solutions with
        // U^T alpha = W^T beta give intersection vectors U^T alpha.
        const int k = static_cast<int>(ub.size()), l = static_cast<int>(wb.size());
        RatMatrix m(d, k + l);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < d; ++i) m.at(i, j) = ub[j][i];
        for (int j = 0; j < l; ++j)
            for (int i = 0; i < d; ++i) m.at(i, k + j) = -wb[j][i];
        for (const Vec& sol : nullspace(m)) {
            Vec v(d);
            for (int j = 0; j < k; ++j) vec_axpy(v, sol[j], ub[j]);
            if (!vec_is_zero(v)) found.push_back(std::move(v));
        }
    };
    block(u.even_basis(), w.even_basis());
    block(u.odd_basis(), w.odd_basis());
    return GradedSubspace::span(u.ambient(), found);
}

GradedSubspace commutator_subspace(const SuperAlgebra& a, const GradedSubspace& u,
                                   const GradedSubspace& w) {
    if (u.ambient() != a.dims() || w.ambient() != a.dims())
        throw std::invalid_argument("commutator_subspace: subspace of a different algebra");
    std::vector<Vec> brackets;
    for (const Vec& x : u.basis())
        for (const Vec& y : w.basis()) brackets.push_back(a.bracket(x, y));
    return GradedSubspace::span(a.dims(), brackets);
}

namespace {

// Kernel of v -> [v, e_k] for all k, restricted to one parity block of the
// coordinate space; returns full-width homogeneous vectors.
std::vector<Vec> central_block(const SuperAlgebra& a, int lo, int hi) {
    const int d = a.dim(), w = hi - lo;
    if (w == 0) return {};
    RatMatrix m(d * d, w);
    for (int c = 0; c < w; ++c) {
        const int i = lo + c;
        for (int k = 0; k < d; ++k) {
            const Vec& br = a.basis_bracket(i, k);
            for (int l = 0; l < d; ++l) m.at(k * d + l, c) = br[l];
        }
    }
    std::vector<Vec> out;
    for (const Vec& sol : nullspace(m)) {
        Vec v(d);
        for (int c = 0; c < w; ++c) v[lo + c] = sol[c];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

GradedSubspace center(const SuperAlgebra& a) {
    std::vector<Vec> rows = central_block(a, 0, a.even_dim());
    std::vector<Vec> odd = central_block(a, a.even_dim(), a.dim());
    rows.insert(rows.end(), odd.begin(), odd.end());
    return GradedSubspace::span(a.dims(), rows);
}

GradedSubspace pair_center(const SuperAlgebra& a, const GradedSubspace& n) {
    if (!is_graded_ideal(a, n))
        throw std::invalid_argument("pair_center: N is not a graded ideal");
    const int d = a.dim();
    std::vector<Vec> found;
    auto block = [&](const std::vector<Vec>& nb) {
        if (nb.empty()) return;
        const int k = static_cast<int>(nb.size());
        // Unknowns: coefficients on N's block basis; constraints [v, e_j] = 0.
        RatMatrix m(d * d, k);
        for (int c = 0; c < k; ++c)
            for (int j = 0; j < d; ++j) {
                const Vec br = a.bracket(nb[c], a.basis_vector(j));
                for (int l = 0; l < d; ++l) m.at(j * d + l, c) = br[l];
            }
        for (const Vec& sol : nullspace(m)) {
            Vec v(d);
            for (int c = 0; c < k; ++c) vec_axpy(v, sol[c], nb[c]);
            found.push_back(std::move(v));
        }
    };
    block(n.even_basis());
    block(n.odd_basis());
    return GradedSubspace::span(a.dims(), found);
}

GradedSubspace centralizer(const SuperAlgebra& a, const Vec& x) {
    const int d = a.dim();
    if (static_cast<int>(x.size()) != d)
        throw std::invalid_argument("centralizer: vector length mismatch");
    std::vector<Vec> found;
    auto block = [&](int lo, int hi) {
        const int w = hi - lo;
        if (w == 0) return;
        RatMatrix m(d, w);
        for (int c = 0; c < w; ++c) {
            const Vec br = a.bracket(x, a.basis_vector(lo + c));
            for (int l = 0; l < d; ++l) m.at(l, c) = br[l];
        }
        for (const Vec& sol : nullspace(m)) {
            Vec v(d);
            for (int c = 0; c < w; ++c) v[lo + c] = sol[c];
            found.push_back(std::move(v));
        }
    };
    block(0, a.even_dim());
    block(a.even_dim(), d);
    return GradedSubspace::span(a.dims(), found);
}

std::vector<GradedSubspace> lower_central_series(const SuperAlgebra& a) {
    std::vector<GradedSubspace> series{GradedSubspace::full(a.dims())};
    while (true) {
        GradedSubspace next = commutator_subspace(a, series.back(), series.front());
        if (next == series.back()) break;  // stabilized (nonzero)
        series.push_back(next);
        if (series.back().is_zero()) break;
    }
    return series;
}

std::optional<int> nilpotency_class(const SuperAlgebra& a) {
    std::vector<GradedSubspace> series = lower_central_series(a);
    if (!series.back().is_zero()) return std::nullopt;
    // series = [L^1, ..., L^{c+1} = 0]: class c.
    return static_cast<int>(series.size()) - 1;
}

bool is_subalgebra(const SuperAlgebra& a, const GradedSubspace& u) {
    return u.contains(commutator_subspace(a, u, u));
}

bool is_graded_ideal(const SuperAlgebra& a, const GradedSubspace& u) {
    return u.contains(commutator_subspace(a, u, GradedSubspace::full(a.dims())));
}

QuotientResult quotient(const SuperAlgebra& a, const GradedSubspace& ideal) {
    if (!is_graded_ideal(a, ideal))
        throw std::invalid_argument("quotient: subspace is not a graded ideal");
    const int d = a.dim();
    std::vector<bool> is_pivot(d, false);
    for (int p : ideal.pivot_indices()) is_pivot[p] = true;

    std::vector<int> section;
    std::vector<std::string> even_names, odd_names;
    for (int i = 0; i < d; ++i) {
        if (is_pivot[i]) continue;
        section.push_back(i);
        (a.parity(i) == Parity::even ? even_names : odd_names).push_back(a.name(i));
    }
    const int q = static_cast<int>(section.size());

    std::vector<Vec> rows = ideal.basis();
    std::vector<int> pivots = row_pivots(rows);
    // projection: reduce modulo the ideal, then read the non-pivot coordinates.
    RatMatrix proj(q, d);
    for (int i = 0; i < d; ++i) {
        Vec e(d);
        e[i] = Rat(1);
        reduce_by(e, rows, pivots);
        for (int c = 0; c < q; ++c) proj.at(c, i) = e[section[c]];
    }

    std::vector<std::vector<Vec>> table(q, std::vector<Vec>(q));
    for (int ai = 0; ai < q; ++ai)
        for (int bi = 0; bi < q; ++bi)
            table[ai][bi] = proj.apply(a.basis_bracket(section[ai], section[bi]));

    QuotientResult res{SuperAlgebra::from_table(even_names, odd_names, std::move(table)),
                       std::move(proj), std::move(section)};
    return res;
}

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
    std::set<std::string> taken(a.names().begin(), a.names().end());
    auto disambiguate = [&](const std::string& name) {
        std::string out = name;
        while (taken.count(out)) out += "'";
        taken.insert(out);
        return out;
    };
    std::vector<std::string> even_names, odd_names;
    for (int i = 0; i < a.even_dim(); ++i) even_names.push_back(a.name(i));
    for (int i = 0; i < b.even_dim(); ++i) even_names.push_back(disambiguate(b.name(i)));
    for (int i = a.even_dim(); i < a.dim(); ++i) odd_names.push_back(a.name(i));
    for (int i = b.even_dim(); i < b.dim(); ++i) odd_names.push_back(disambiguate(b.name(i)));

    const int d = a.dim() + b.dim();
    // index maps into the concatenated (even | odd) basis
    auto a_pos = [&](int i) { return i < a.even_dim() ? i : b.even_dim() + i; };
    auto b_pos = [&](int i) {
        return i < b.even_dim() ? a.even_dim() + i : a.even_dim() + a.odd_dim() + i;
    };
    std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d)));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const Vec& br = a.basis_bracket(i, j);
            for (int k = 0; k < a.dim(); ++k) table[a_pos(i)][a_pos(j)][a_pos(k)] = br[k];
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) {
            const Vec& br = b.basis_bracket(i, j);
            for (int k = 0; k < b.dim(); ++k) table[b_pos(i)][b_pos(j)][b_pos(k)] = br[k];
        }
    return SuperAlgebra::from_table(even_names, odd_names, std::move(table));
}

SubalgebraResult restrict_to_subalgebra(const SuperAlgebra& a, const GradedSubspace& u) {
    if (!is_subalgebra(a, u))
        throw std::invalid_argument("restrict_to_subalgebra: subspace is not a subalgebra");
    std::vector<Vec> rows = u.basis();
    const int k = static_cast<int>(rows.size());
    std::vector<int> pivots = row_pivots(rows);
    std::vector<std::string> even_names, odd_names;
    for (int c = 0; c < k; ++c)
        (c < u.dim().even ? even_names : odd_names).push_back(a.name(pivots[c]));

    // RREF rows: coordinates in U's basis are read off at the pivot positions.
    std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k, Vec(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Vec br = a.bracket(rows[i], rows[j]);
            for (int c = 0; c < k; ++c) table[i][j][c] = br[pivots[c]];
        }
    RatMatrix incl(a.dim(), k);
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < a.dim(); ++i) incl.at(i, c) = rows[c][i];
    return {SuperAlgebra::from_table(even_names, odd_names, std::move(table)), std::move(incl)};
}

}  // namespace superschur
