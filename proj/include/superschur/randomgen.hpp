#pragma once

#include <cstdint>
#include <random>

#include "superschur/action.hpp"
#include "superschur/superalgebra.hpp"

namespace superschur {

/// Deterministic source for randomized test populations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi);  // inclusive
    Rat small_rational(bool allow_fraction = true);

private:
    std::mt19937_64 eng_;
};

/// Random two-step nilpotent superalgebra: generators bracket into a central
/// block, so the graded Jacobi identity holds for any choice of coefficients.
SuperAlgebra random_two_step_nilpotent(Rng& rng, int gen_even, int gen_odd, int cen_even,
                                       int cen_odd);

/// Rewrites A on a random parity-preserving basis (unit upper-triangular
/// blocks with small integer entries); the result is isomorphic to A.
SuperAlgebra random_basis_change(const SuperAlgebra& a, Rng& rng);

/// A valid superalgebra of dimension at most max_dims: a basis-changed
/// two-step nilpotent algebra with random block sizes.
SuperAlgebra random_valid_algebra(Rng& rng, Dims max_dims);

struct ActionTriple {
    SuperAlgebra l;
    SuperAlgebra m;
    ActionTable act;
};

/// A triple (L, M, action) passing validate_action: either an adjoint action
/// on a graded ideal of a random nilpotent algebra, or a trivial action.
ActionTriple random_action_triple(Rng& rng);

}  // namespace superschur
