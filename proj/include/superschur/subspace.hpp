#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superschur/superalgebra.hpp"

namespace superschur {

/// Sub-superspace of an algebra, held as a canonical homogeneous basis:
/// one reduced-row-echelon block per parity, rows full-width. Canonical form
/// makes subspace equality a syntactic check.
class GradedSubspace {
public:
    GradedSubspace() = default;
    static GradedSubspace zero(Dims ambient);
    static GradedSubspace full(Dims ambient);
    /// Span of homogeneous vectors (throws on mixed-parity input).
    static GradedSubspace span(Dims ambient, const std::vector<Vec>& vectors);

    Dims ambient() const { return ambient_; }
    Dims dim() const {
        return {static_cast<int>(even_.size()), static_cast<int>(odd_.size())};
    }
    bool is_zero() const { return even_.empty() && odd_.empty(); }

    const std::vector<Vec>& even_basis() const { return even_; }
    const std::vector<Vec>& odd_basis() const { return odd_; }
    /// Even basis rows then odd basis rows.
    std::vector<Vec> basis() const;

    bool contains(const Vec& v) const;
    bool contains(const GradedSubspace& other) const;
    /// Coordinates of v in this basis (nullopt if v is outside the span).
    std::optional<Vec> coordinates(const Vec& v) const;

    /// Pivot coordinate indices, even block then odd block.
    std::vector<int> pivot_indices() const;

    friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) = default;

private:
    Dims ambient_;
    std::vector<Vec> even_;  // RREF rows, pivots in even coordinates
    std::vector<Vec> odd_;
};

GradedSubspace subspace_sum(const GradedSubspace& u, const GradedSubspace& w);
GradedSubspace subspace_intersection(const GradedSubspace& u, const GradedSubspace& w);

/// Span of all [u, w] over basis pairs of U and W.
GradedSubspace commutator_subspace(const SuperAlgebra& a, const GradedSubspace& u,
                                   const GradedSubspace& w);

/// Z(L) = {v : [v, x] = 0 for all x}.
GradedSubspace center(const SuperAlgebra& a);

/// Z(N,L) = {n in N : [n, x] = 0 for all x in L}; N must be a graded ideal.
GradedSubspace pair_center(const SuperAlgebra& a, const GradedSubspace& n);

/// {v : [x, v] = 0}, computed per parity block.
GradedSubspace centralizer(const SuperAlgebra& a, const Vec& x);

/// L^1 = L, L^{i+1} = [L^i, L]; returned strictly descending until the first
/// repeat or zero term (the stabilized term is included once).
std::vector<GradedSubspace> lower_central_series(const SuperAlgebra& a);

/// Least c with L^{c+1} = 0, or nullopt when the series stabilizes nonzero.
std::optional<int> nilpotency_class(const SuperAlgebra& a);

bool is_subalgebra(const SuperAlgebra& a, const GradedSubspace& u);
bool is_graded_ideal(const SuperAlgebra& a, const GradedSubspace& u);

struct QuotientResult {
    SuperAlgebra algebra;
    /// dim(A/I) x dim(A); maps coordinates in A to coordinates in A/I.
    RatMatrix projection;
    /// For each quotient basis element, the A-basis index it came from.
    std::vector<int> section_indices;
};

/// Quotient by a graded ideal; quotient basis = non-pivot coordinates of the
/// ideal's echelon form, in input order. Throws if I is not a graded ideal.
QuotientResult quotient(const SuperAlgebra& a, const GradedSubspace& ideal);

/// Block sum, cross brackets zero; colliding labels get a suffix.
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

struct SubalgebraResult {
    SuperAlgebra algebra;
    /// dim(A) x dim(U); columns are U's basis vectors in A coordinates.
    RatMatrix inclusion;
};

/// The algebra structure induced on a subalgebra's canonical basis.
/// Throws if U is not closed under the bracket.
SubalgebraResult restrict_to_subalgebra(const SuperAlgebra& a, const GradedSubspace& u);

}  // namespace superschur
