#pragma once

#include <string>

#include "superschur/superalgebra.hpp"

namespace superschur {

struct PairPresentation;

/// ((m+n)^2 + (n-m)) / 2: the super exterior-square dimension; at n = 0 this
/// is m(m-1)/2.
int nayak_bound(int m, int n);

/// Bound on dim [N,L] from dim(N/Z(N,L)) = (m|n) and dim(L/N):
/// nayak(m,n) + (m+n) dim(L/N).
int commutator_bound(Dims dim_n_mod_center, Dims dim_l_over_n);

/// Bound on dim M(N,L) from dim N = (m|n):
/// nayak(m,n) + dim N * dim(L/N) [- dim [N,L] when include_commutator].
int pair_multiplier_bound(Dims dim_n, Dims dim_l_over_n, int dim_commutator_nl,
                          bool include_commutator);

enum class HeisenbergKind { even_center, odd_center };

/// Multiplier dimension of the Heisenberg families. even_center uses (m, n):
/// 2m^2 - m - 1 + 2mn + n(n+1)/2 for m+n >= 2, with special values 0 at
/// (0,1) and 2 at (1,0). odd_center uses n only: 2n^2 - 1 for n >= 2, 2 at
/// n = 1. Throws on out-of-family parameters.
int heisenberg_multiplier_formula(HeisenbergKind kind, int m, int n);

/// nayak_bound(dim L) - dim M(L); zero exactly on abelian algebras.
int defect_t(const SuperAlgebra& a);

/// bound_pair - dim M(N,L); needs a complemented pair.
int defect_t_pair(const PairPresentation& p);

struct CheckResult {
    enum class Status { pass, fail, vacuous, hypothesis_unmet };
    Status status = Status::vacuous;
    std::string detail;
    bool passed() const { return status == Status::pass || status == Status::vacuous; }
    std::string status_str() const;
};

/// If the pair defect is 1, asserts: L non-abelian and ([N,L] = 0, or
/// dim [N,L] = 1 with [N,L] = Z(N,L)). Vacuous when the defect differs
/// from 1; hypothesis_unmet when L is not nilpotent.
CheckResult check_pair_defect_one(const PairPresentation& p);

/// Asserts defect_t(A) = 1 iff A is Heisenberg of dimension (3|0)
/// (dim = (3|0), dim L^2 = dim Z = 1, L^2 = Z). hypothesis_unmet when A is
/// not nilpotent.
CheckResult check_defect_one_characterization(const SuperAlgebra& a);

/// The structural recognizer used by check_defect_one_characterization.
bool is_heisenberg_h1(const SuperAlgebra& a);

}  // namespace superschur
