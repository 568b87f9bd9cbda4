#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superschur/superalgebra.hpp"

namespace superschur {

/// (m|n)-dimensional algebra with all brackets zero.
SuperAlgebra abelian(int m, int n);

/// Heisenberg Lie algebra H(m), dimension (2m+1|0): [x_i, x_{m+i}] = z.
SuperAlgebra heisenberg_lie(int m);

/// Heisenberg superalgebra of even center, dimension (2m+1|n):
/// [x_i, x_{m+i}] = z = [y_j, y_j]. Requires m + n >= 1.
SuperAlgebra heisenberg_even(int m, int n);

/// Heisenberg superalgebra of odd center, dimension (n|n+1): [x_i, y_i] = z.
SuperAlgebra heisenberg_odd(int n);

enum class NonAbelian11 { solvable, heisenberg };

/// The two non-abelian (1|1) superalgebras: [x,y] = y (not nilpotent) and
/// [y,y] = x (Heisenberg of even center).
SuperAlgebra nonabelian_11(NonAbelian11 kind);

struct CatalogEntry {
    std::string id;
    SuperAlgebra algebra;
    /// Known multiplier dimension where a closed form exists.
    std::optional<int> expected_multiplier;
};

/// Every family instance of total dimension <= max_dim, plus direct sums of
/// pairs of instances within the budget. Deterministic order.
std::vector<CatalogEntry> enumerate_catalog(int max_dim);

}  // namespace superschur
