#pragma once

#include <optional>
#include <string>

#include "superschur/action.hpp"
#include "superschur/homology.hpp"
#include "superschur/subspace.hpp"

namespace superschur {

/// A pair (N, L): L with a distinguished graded ideal N, and optionally a
/// claimed complement subalgebra K.
struct PairPresentation {
    SuperAlgebra l;
    GradedSubspace n;
    std::optional<GradedSubspace> k;
};

struct ComplementReport {
    bool ok = false;
    bool is_subalgebra = false;
    bool is_ideal = false;  // reported, not required
    bool trivial_intersection = false;
    bool dims_add = false;
    std::string str() const;
};

/// True iff K is a graded subalgebra with L = N + K and N intersect K = 0.
ComplementReport verify_complement(const PairPresentation& p);

/// Searches spans of basis subsets (per parity block, lexicographic) for a
/// subalgebra complement of N; first hit or nullopt.
std::optional<GradedSubspace> find_complement(const SuperAlgebra& l, const GradedSubspace& n);

/// Thrown when a pair operation needs a complement and none is available.
struct UnsupportedPairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PairMultiplierReport {
    Dims dim_n;
    Dims dim_quotient;
    int dim_multiplier_l = 0;
    int dim_multiplier_quotient = 0;
    int dim_multiplier_pair = 0;  // M(N,L) = M(L) - M(L/N)
    Dims dim_commutator_nl;       // dim [N,L]
    Dims dim_center_nl;           // dim Z(N,L)
    int bound_pair = 0;            // Nayak(dim N) + dim N * dim(L/N)
    int bound_pair_refined = 0;          // bound_pair - dim [N,L]
    int defect_t = 0;             // bound_pair - dim M(N,L)
    GradedSubspace complement;
    bool complement_is_ideal = false;
};

/// dim M(N,L) through the complement decomposition
/// M(L) = M(N,L) + M(L/N). Throws UnsupportedPairError when K is absent,
/// fails verification and no basis-aligned complement exists.
PairMultiplierReport pair_multiplier(const PairPresentation& p);

/// Relative central extension sigma : M -> L of the pair (N, L), with an
/// action of L on M.
struct RelativeCentralExtension {
    SuperAlgebra m;
    SuperAlgebra l;
    GradedSubspace n;  // subspace of L
    RatMatrix sigma;   // dim(L) x dim(M)
    ActionTable act;   // L acting on M
};

/// Checks that sigma is a parity-preserving homomorphism and conditions
/// (i) sigma(M) = N, (ii) sigma(^l m) = [l, sigma(m)],
/// (iii) ^{sigma(m')} m = [m', m], (iv) ker sigma inside Z(M,L),
/// where Z(M,L) = {m : ^l m = 0 for all l}.
ValidationReport validate_rce(const RelativeCentralExtension& e);

/// Kernel of sigma as a graded subspace of M.
GradedSubspace rce_kernel(const RelativeCentralExtension& e);
/// [M,L] = span of all ^l m, as a graded subspace of M.
GradedSubspace rce_action_commutator(const RelativeCentralExtension& e);

struct CoverCheck {
    bool ok = false;
    int dim_kernel = 0;
    int dim_pair_multiplier = 0;
    bool kernel_in_commutator = false;
    std::string detail;
};

/// Cover test: dim ker sigma = dim M(N,L) and ker sigma inside [M,L].
/// Requires validate_rce(e) to pass and p to describe the same pair.
CoverCheck is_cover_candidate(const RelativeCentralExtension& e, const PairPresentation& p);

}  // namespace superschur
