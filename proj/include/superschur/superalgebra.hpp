#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superschur/ratmatrix.hpp"

namespace superschur {

enum class Parity : int { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline int parity_bit(Parity p) { return static_cast<int>(p); }
/// (-1)^{|a||b|}
inline int koszul_power(Parity a, Parity b) {
    return (parity_bit(a) & parity_bit(b)) ? -1 : 1;
}

/// Dimension of a superspace, (even | odd).
struct Dims {
    int even = 0;
    int odd = 0;

    int total() const { return even + odd; }
    friend Dims operator+(Dims a, Dims b) { return {a.even + b.even, a.odd + b.odd}; }
    friend Dims operator-(Dims a, Dims b) { return {a.even - b.even, a.odd - b.odd}; }
    friend bool operator==(Dims a, Dims b) = default;
    std::string str() const {
        return "(" + std::to_string(even) + "|" + std::to_string(odd) + ")";
    }
};

struct Violation {
    enum class Kind {
        grading,
        antisymmetry,
        jacobi,
        action_grading,        // action axiom (i)
        action_compatibility,  // action axiom (ii)
        action_derivation,     // action axiom (iii)
        rce_parity,
        rce_homomorphism,
        rce_image,          // condition (i)
        rce_equivariance,   // condition (ii)
        rce_self_action,    // condition (iii)
        rce_kernel_central  // condition (iv)
    };
    Kind kind;
    std::array<int, 3> where;  // basis indices (i, j, k), -1 when unused
    std::string detail;
};

std::string violation_kind_name(Violation::Kind kind);

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Finite-dimensional Lie superalgebra presented by a named homogeneous basis
/// and exact rational structure constants. Basis order is even part first,
/// then odd part. Immutable after construction.
class SuperAlgebra {
public:
    SuperAlgebra() = default;  // zero algebra

    /// Full table: sc[i][j] is the coordinate vector of [e_i, e_j]. No
    /// completion, no checking beyond shape; use validate() for the axioms.
    static SuperAlgebra from_table(std::vector<std::string> even_names,
                                   std::vector<std::string> odd_names,
                                   std::vector<std::vector<Vec>> sc);

    /// Incremental construction: brackets are given for one orientation of
    /// each basis pair and the table is completed by super antisymmetry.
    class Builder {
    public:
        Builder(std::vector<std::string> even_names, std::vector<std::string> odd_names);
        /// Sets [e_i, e_j] = value (full-width coordinates). Accepts either
        /// orientation; specifying a pair twice is an error.
        Builder& set_bracket(int i, int j, Vec value);
        Builder& set_component(int i, int j, int k, const Rat& c);
        SuperAlgebra build();

    private:
        int dim() const { return static_cast<int>(even_.size() + odd_.size()); }
        Parity parity(int i) const {
            return i < static_cast<int>(even_.size()) ? Parity::even : Parity::odd;
        }
        const std::string& label(int i) const {
            return i < static_cast<int>(even_.size()) ? even_[i] : odd_[i - even_.size()];
        }
        std::vector<std::string> even_, odd_;
        std::vector<std::vector<Vec>> sc_;
        std::vector<std::vector<bool>> given_;
    };

    Dims dims() const { return {even_dim_, static_cast<int>(names_.size()) - even_dim_}; }
    int dim() const { return static_cast<int>(names_.size()); }
    int even_dim() const { return even_dim_; }
    int odd_dim() const { return dim() - even_dim_; }

    Parity parity(int i) const { return i < even_dim_ ? Parity::even : Parity::odd; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    /// Index of a basis label, or nullopt.
    std::optional<int> index_of(const std::string& name) const;

    /// c_{ij}: coordinates of [e_i, e_j].
    const Vec& basis_bracket(int i, int j) const { return sc_[i][j]; }

    /// Bilinear extension of the structure constants.
    Vec bracket(const Vec& x, const Vec& y) const;

    Vec basis_vector(int i) const;
    Vec zero_vector() const { return Vec(dim()); }

    /// Parity of a homogeneous vector; nullopt for zero or mixed support.
    std::optional<Parity> homogeneous_parity(const Vec& v) const;

    /// Checks grading, super antisymmetry and the graded Jacobi identity on
    /// all basis pairs/triples. Violations are report entries, not errors.
    ValidationReport validate() const;

    bool is_abelian() const;

    friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
        return a.even_dim_ == b.even_dim_ && a.names_ == b.names_ && a.sc_ == b.sc_;
    }

    /// Equal structure constants on equal dimensions, labels ignored.
    friend bool same_structure_constants(const SuperAlgebra& a, const SuperAlgebra& b) {
        return a.even_dim_ == b.even_dim_ && a.names_.size() == b.names_.size() &&
               a.sc_ == b.sc_;
    }

private:
    int even_dim_ = 0;
    std::vector<std::string> names_;        // even labels then odd labels
    std::vector<std::vector<Vec>> sc_;      // sc_[i][j] = coords of [e_i, e_j]
};

}  // namespace superschur
