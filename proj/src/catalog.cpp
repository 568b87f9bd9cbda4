#include "superschur/catalog.hpp"

#include <stdexcept>

#include "superschur/bounds.hpp"
#include "superschur/subspace.hpp"

namespace superschur {

namespace {

std::vector<std::string> numbered(const std::string& stem, int count, int from = 1) {
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) names.push_back(stem + std::to_string(from + i));
    return names;
}

}  // namespace

SuperAlgebra abelian(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("abelian: negative dimension");
    SuperAlgebra::Builder b(numbered("x", m), numbered("y", n));
    return b.build();
}

SuperAlgebra heisenberg_lie(int m) {
    if (m < 1) throw std::invalid_argument("heisenberg_lie: m >= 1 required");
    return heisenberg_even(m, 0);
}

SuperAlgebra heisenberg_even(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1)
        throw std::invalid_argument("heisenberg_even: m + n >= 1 required");
    std::vector<std::string> even = numbered("x", 2 * m);
    even.push_back("z");
    SuperAlgebra::Builder b(std::move(even), numbered("y", n));
    const int z = 2 * m;  // index of the central element
    for (int i = 0; i < m; ++i) b.set_component(i, m + i, z, Rat(1));
    for (int j = 0; j < n; ++j) b.set_component(2 * m + 1 + j, 2 * m + 1 + j, z, Rat(1));
    return b.build();
}

SuperAlgebra heisenberg_odd(int n) {
    if (n < 1) throw std::invalid_argument("heisenberg_odd: n >= 1 required");
    std::vector<std::string> odd = numbered("y", n);
    odd.push_back("z");
    SuperAlgebra::Builder b(numbered("x", n), std::move(odd));
    const int z = 2 * n;  // odd block: y_1..y_n then z
    for (int i = 0; i < n; ++i) b.set_component(i, n + i, z, Rat(1));
    return b.build();
}

SuperAlgebra nonabelian_11(NonAbelian11 kind) {
    SuperAlgebra::Builder b({"x"}, {"y"});
    if (kind == NonAbelian11::solvable) {
        b.set_component(0, 1, 1, Rat(1));  // [x,y] = y
    } else {
        b.set_component(1, 1, 0, Rat(1));  // [y,y] = x
    }
    return b.build();
}

std::vector<CatalogEntry> enumerate_catalog(int max_dim) {
    if (max_dim < 1) throw std::invalid_argument("enumerate_catalog: max_dim >= 1 required");
    std::vector<CatalogEntry> base;

    for (int total = 1; total <= max_dim; ++total)
        for (int m = total; m >= 0; --m) {
            const int n = total - m;
            base.push_back({"abelian(" + std::to_string(m) + "|" + std::to_string(n) + ")",
                            abelian(m, n), nayak_bound(m, n)});
        }
    for (int m = 0; 2 * m + 1 <= max_dim; ++m)
        for (int n = (m == 0 ? 1 : 0); 2 * m + 1 + n <= max_dim; ++n)
            base.push_back({"H_even(" + std::to_string(m) + "," + std::to_string(n) + ")",
                            heisenberg_even(m, n),
                            heisenberg_multiplier_formula(HeisenbergKind::even_center, m, n)});
    for (int n = 1; 2 * n + 1 <= max_dim; ++n)
        base.push_back({"H_odd(" + std::to_string(n) + ")", heisenberg_odd(n),
                        heisenberg_multiplier_formula(HeisenbergKind::odd_center, 0, n)});
    if (max_dim >= 2)
        base.push_back({"solvable(1|1)", nonabelian_11(NonAbelian11::solvable), std::nullopt});

    std::vector<CatalogEntry> out = base;
    for (size_t i = 0; i < base.size(); ++i)
        for (size_t j = i; j < base.size(); ++j) {
            if (base[i].algebra.dim() + base[j].algebra.dim() > max_dim) continue;
            out.push_back({"sum(" + base[i].id + "," + base[j].id + ")",
                           direct_sum(base[i].algebra, base[j].algebra), std::nullopt});
        }
    return out;
}

}  // namespace superschur
