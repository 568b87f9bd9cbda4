#include "superschur/homology.hpp"

#include <stdexcept>

#include "superschur/bounds.hpp"

namespace superschur {

namespace {

bool index_odd(Dims d, int i) { return i >= d.even; }

}  // namespace

Wedge2Basis::Wedge2Basis(Dims dims) : dims_(dims) {
    const int d = dims.total();
    pos_.assign(d, std::vector<int>(d, -1));
    for (int p = 0; p < d; ++p)
        for (int q = p; q < d; ++q) {
            if (p == q && !index_odd(dims, p)) continue;
            pos_[p][q] = static_cast<int>(pairs_.size());
            pairs_.emplace_back(p, q);
        }
}

std::pair<int, int> Wedge2Basis::canonical(int p, int q) const {
    const bool p_odd = index_odd(dims_, p), q_odd = index_odd(dims_, q);
    if (p == q) return p_odd ? std::pair{1, pos_[p][q]} : std::pair{0, -1};
    if (p < q) return {1, pos_[p][q]};
    // swap: sign -(-1)^{|p||q|}
    return {(p_odd && q_odd) ? 1 : -1, pos_[q][p]};
}

Wedge3Basis::Wedge3Basis(Dims dims) {
    const int d = dims.total();
    for (int p = 0; p < d; ++p)
        for (int q = p; q < d; ++q) {
            if (p == q && !index_odd(dims, p)) continue;
            for (int r = q; r < d; ++r) {
                if (q == r && !index_odd(dims, q)) continue;
                triples_.push_back({p, q, r});
            }
        }
}

int wedge2_size(Dims dims) { return Wedge2Basis(dims).size(); }
int wedge3_size(Dims dims) { return Wedge3Basis(dims).size(); }

Vec canonicalize_wedge2(const SuperAlgebra& a, const Wedge2Basis& w2, const Vec& x, const Vec& y) {
    if (!a.homogeneous_parity(x) && !vec_is_zero(x))
        throw std::invalid_argument("canonicalize_wedge2: first factor is not homogeneous");
    if (!a.homogeneous_parity(y) && !vec_is_zero(y))
        throw std::invalid_argument("canonicalize_wedge2: second factor is not homogeneous");
    Vec out(w2.size());
    for (int p = 0; p < a.dim(); ++p) {
        if (x[p].is_zero()) continue;
        for (int q = 0; q < a.dim(); ++q) {
            if (y[q].is_zero()) continue;
            auto [sign, col] = w2.canonical(p, q);
            if (sign == 0) continue;
            out[col] += x[p] * y[q] * Rat(sign);
        }
    }
    return out;
}

RatMatrix build_d2(const SuperAlgebra& a) {
    const Wedge2Basis w2(a.dims());
    RatMatrix d2(a.dim(), w2.size());
    for (int c = 0; c < w2.size(); ++c) {
        auto [p, q] = w2.generator(c);
        const Vec& br = a.basis_bracket(p, q);
        for (int k = 0; k < a.dim(); ++k) d2.at(k, c) = br[k];
    }
    return d2;
}

namespace {

// out += coeff * (v ^ e_r), expanding v over the basis.
void add_wedge_with_basis(const SuperAlgebra& a, const Wedge2Basis& w2, Vec& out, const Rat& coeff,
                          const Vec& v, int r) {
    if (coeff.is_zero()) return;
    for (int s = 0; s < a.dim(); ++s) {
        if (v[s].is_zero()) continue;
        auto [sign, col] = w2.canonical(s, r);
        if (sign == 0) continue;
        out[col] += coeff * v[s] * Rat(sign);
    }
}

}  // namespace

RatMatrix build_d3(const SuperAlgebra& a) {
    const Wedge2Basis w2(a.dims());
    const Wedge3Basis w3(a.dims());
    RatMatrix d3(w2.size(), w3.size());
    for (int c = 0; c < w3.size(); ++c) {
        const auto& [u, v, w] = w3.generator(c);
        const int pu = parity_bit(a.parity(u)), pv = parity_bit(a.parity(v)),
                  pw = parity_bit(a.parity(w));
        // signs: (-1)^{|u|(|v|+|w|)} and (-1)^{|w|(|u|+|v|)}
        const int s2 = (pu * ((pv + pw) % 2)) % 2 ? -1 : 1;
        const int s3 = (pw * ((pu + pv) % 2)) % 2 ? -1 : 1;
        Vec col(w2.size());
        add_wedge_with_basis(a, w2, col, Rat(1), a.basis_bracket(u, v), w);
        add_wedge_with_basis(a, w2, col, Rat(s2), a.basis_bracket(v, w), u);
        add_wedge_with_basis(a, w2, col, Rat(s3), a.basis_bracket(w, u), v);
        for (int i = 0; i < w2.size(); ++i) d3.at(i, c) = col[i];
    }
    return d3;
}

MultiplierReport multiplier_dim(const SuperAlgebra& a) {
    MultiplierReport rep;
    rep.dims = a.dims();
    rep.lambda2_dim = wedge2_size(a.dims());
    rep.rank_d2 = rank(build_d2(a));
    rep.rank_d3 = rank(build_d3(a));
    rep.dim_multiplier = rep.lambda2_dim - rep.rank_d2 - rep.rank_d3;
    rep.nayak_bound = nayak_bound(a.dims().even, a.dims().odd);
    rep.defect_t = rep.nayak_bound - rep.dim_multiplier;
    return rep;
}

}  // namespace superschur
