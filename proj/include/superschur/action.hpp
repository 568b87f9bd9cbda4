#pragma once

#include "superschur/subspace.hpp"
#include "superschur/superalgebra.hpp"

namespace superschur {

/// Action of L on M, tabulated on basis pairs: table[l][m] = coordinates of
/// the image of (e_l, e_m) in M.
struct ActionTable {
    SuperAlgebra acting;  // L
    SuperAlgebra acted;   // M
    std::vector<std::vector<Vec>> table;

    static ActionTable trivial(const SuperAlgebra& l, const SuperAlgebra& m);

    /// Action applied to arbitrary vectors, bilinear in both slots.
    Vec apply(const Vec& l, const Vec& m) const;
    Vec apply_basis(int l, int m) const { return table[l][m]; }
};

/// Checks the action axioms on all basis pairs and triples:
/// (i) even grading, (ii) bracket compatibility, (iii) derivation rule.
ValidationReport validate_action(const ActionTable& act);

/// M x L with bracket
/// [(m,l),(m',l')] = ([m,m'] + ^l m' - (-1)^{|m||l'|} ^{l'} m, [l,l']).
/// Basis: M's block first, then L's, per parity. Throws on invalid action.
SuperAlgebra semidirect(const SuperAlgebra& m, const SuperAlgebra& l, const ActionTable& act);

/// M embedded in semidirect(M, L, act) as a graded subspace.
GradedSubspace semidirect_ideal_m(const SuperAlgebra& m, const SuperAlgebra& l);

struct AdjointActionResult {
    SuperAlgebra m;  // the ideal as an algebra on its own basis
    ActionTable act;
};

/// Adjoint action of A on a graded ideal U: ^l u = [l, u].
AdjointActionResult adjoint_action_on_ideal(const SuperAlgebra& a, const GradedSubspace& u);

}  // namespace superschur
