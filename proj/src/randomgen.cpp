#include "superschur/randomgen.hpp"

#include <stdexcept>

#include "superschur/subspace.hpp"

namespace superschur {

int Rng::uniform(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(eng_);
}

Rat Rng::small_rational(bool allow_fraction) {
    const int num = uniform(-3, 3);
    const int den = allow_fraction ? uniform(1, 3) : 1;
    return Rat(num, den);
}

SuperAlgebra random_two_step_nilpotent(Rng& rng, int gen_even, int gen_odd, int cen_even,
                                       int cen_odd) {
    const int m = gen_even + cen_even, n = gen_odd + cen_odd;
    std::vector<std::string> even, odd;
    for (int i = 0; i < gen_even; ++i) even.push_back("a" + std::to_string(i + 1));
    for (int i = 0; i < cen_even; ++i) even.push_back("c" + std::to_string(i + 1));
    for (int i = 0; i < gen_odd; ++i) odd.push_back("b" + std::to_string(i + 1));
    for (int i = 0; i < cen_odd; ++i) odd.push_back("d" + std::to_string(i + 1));
    SuperAlgebra::Builder b(std::move(even), std::move(odd));

    const int d = m + n;
    auto central_value = [&](Parity target) {
        Vec v(d);
        if (target == Parity::even) {
            for (int k = 0; k < cen_even; ++k) v[gen_even + k] = rng.small_rational();
        } else {
            for (int k = 0; k < cen_odd; ++k) v[m + gen_odd + k] = rng.small_rational();
        }
        return v;
    };
    // even-even generator pairs, i < j
    for (int i = 0; i < gen_even; ++i)
        for (int j = i + 1; j < gen_even; ++j) b.set_bracket(i, j, central_value(Parity::even));
    // (even, odd) generator pairs
    for (int i = 0; i < gen_even; ++i)
        for (int j = 0; j < gen_odd; ++j) b.set_bracket(i, m + j, central_value(Parity::odd));
    // odd-odd generator pairs, i <= j
    for (int i = 0; i < gen_odd; ++i)
        for (int j = i; j < gen_odd; ++j) b.set_bracket(m + i, m + j, central_value(Parity::even));
    return b.build();
}

SuperAlgebra random_basis_change(const SuperAlgebra& a, Rng& rng) {
    const int d = a.dim();
    // Unit upper-triangular inside each parity block: invertible, parity
    // preserving, small integer entries.
    RatMatrix p = RatMatrix::identity(d);
    auto fill_block = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i)
            for (int j = i + 1; j < hi; ++j) p.at(i, j) = Rat(rng.uniform(-2, 2));
    };
    fill_block(0, a.even_dim());
    fill_block(a.even_dim(), d);

    const RatMatrix p_inv = inverse(p);
    std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
    std::vector<Vec> new_basis(d);
    for (int i = 0; i < d; ++i) {
        Vec v(d);
        for (int r = 0; r < d; ++r) v[r] = p.at(r, i);
        new_basis[i] = std::move(v);
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            table[i][j] = p_inv.apply(a.bracket(new_basis[i], new_basis[j]));

    std::vector<std::string> even, odd;
    for (int i = 0; i < d; ++i)
        (a.parity(i) == Parity::even ? even : odd).push_back(a.name(i) + "~");
    return SuperAlgebra::from_table(std::move(even), std::move(odd), std::move(table));
}

SuperAlgebra random_valid_algebra(Rng& rng, Dims max_dims) {
    const int m = rng.uniform(0, max_dims.even);
    const int n = rng.uniform(0, max_dims.odd);
    const int cen_even = m == 0 ? 0 : rng.uniform(0, m);
    const int cen_odd = n == 0 ? 0 : rng.uniform(0, n);
    SuperAlgebra a = random_two_step_nilpotent(rng, m - cen_even, n - cen_odd, cen_even, cen_odd);
    if (rng.uniform(0, 1) == 0) a = random_basis_change(a, rng);
    return a;
}

ActionTriple random_action_triple(Rng& rng) {
    const int kind = rng.uniform(0, 3);
    if (kind == 0) {
        // trivial action of a random algebra on a random abelian module
        SuperAlgebra l = random_valid_algebra(rng, {3, 3});
        SuperAlgebra m = random_two_step_nilpotent(rng, rng.uniform(0, 2), rng.uniform(0, 2), 0, 0);
        return {l, m, ActionTable::trivial(l, m)};
    }
    // adjoint action on a graded ideal
    SuperAlgebra p = random_two_step_nilpotent(rng, rng.uniform(1, 3), rng.uniform(0, 2),
                                               rng.uniform(1, 2), rng.uniform(0, 1));
    GradedSubspace ideal;
    if (kind == 1) {
        ideal = GradedSubspace::full(p.dims());  // P acting on itself
    } else {
        // one generator plus everything the brackets can reach
        GradedSubspace seed = GradedSubspace::span(p.dims(), {p.basis_vector(0)});
        ideal = subspace_sum(seed, commutator_subspace(p, GradedSubspace::full(p.dims()),
                                                       GradedSubspace::full(p.dims())));
        ideal = subspace_sum(ideal, center(p));
    }
    AdjointActionResult adj = adjoint_action_on_ideal(p, ideal);
    return {p, std::move(adj.m), std::move(adj.act)};
}

}  // namespace superschur
