#pragma once

#include <utility>

#include "superschur/superalgebra.hpp"

namespace superschur {

/// Basis of the super exterior square of an (m|n) superspace:
/// e_i ^ e_j (i < j, even), e_i ^ f_a (even, odd), f_a v f_b (a <= b, odd),
/// blocks in that order, lexicographic inside each block. Since even basis
/// indices precede odd ones, generators are exactly the sorted index pairs
/// with repeats allowed only at odd indices.
class Wedge2Basis {
public:
    explicit Wedge2Basis(Dims dims);

    int size() const { return static_cast<int>(pairs_.size()); }
    std::pair<int, int> generator(int col) const { return pairs_[col]; }
    /// Column of the canonical generator (p, q); p <= q, valid generator.
    int index_of(int p, int q) const { return pos_[p][q]; }

    /// Canonical image of the ordered pair (p, q) of basis indices:
    /// (sign, column); sign 0 means the pair collapses (even diagonal).
    std::pair<int, int> canonical(int p, int q) const;

private:
    Dims dims_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::vector<int>> pos_;
};

/// Degree-3 analogue: sorted index triples, repeats allowed only at odd
/// indices; blocks eee, eef, eff, fff in lexicographic order.
class Wedge3Basis {
public:
    explicit Wedge3Basis(Dims dims);
    int size() const { return static_cast<int>(triples_.size()); }
    const std::array<int, 3>& generator(int col) const { return triples_[col]; }

private:
    std::vector<std::array<int, 3>> triples_;
};

int wedge2_size(Dims dims);
int wedge3_size(Dims dims);

/// Bilinear expansion of x ^ y into Wedge2 coordinates, with the Koszul sign
/// -(-1)^{|u||v|} per transposition. Inputs must be homogeneous.
Vec canonicalize_wedge2(const SuperAlgebra& a, const Wedge2Basis& w2, const Vec& x, const Vec& y);

/// d2 : Wedge2 -> L, generator (p,q) |-> [e_p, e_q]. Shape dim(L) x |Wedge2|.
RatMatrix build_d2(const SuperAlgebra& a);

/// d3 : Wedge3 -> Wedge2, generator (u,v,w) |->
///   [u,v]^w + (-1)^{|u|(|v|+|w|)}[v,w]^u + (-1)^{|w|(|u|+|v|)}[w,u]^v.
RatMatrix build_d3(const SuperAlgebra& a);

struct MultiplierReport {
    Dims dims;
    int lambda2_dim = 0;
    int rank_d2 = 0;  // equals dim [L,L]
    int rank_d3 = 0;
    int dim_multiplier = 0;
    int nayak_bound = 0;
    int defect_t = 0;
};

/// dim M(L) = dim H2(L) = |Wedge2| - rank d2 - rank d3.
MultiplierReport multiplier_dim(const SuperAlgebra& a);

}  // namespace superschur
