#include "superschur/superalgebra.hpp"

#include <stdexcept>

namespace superschur {

std::string violation_kind_name(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::grading: return "grading";
        case Violation::Kind::antisymmetry: return "antisymmetry";
        case Violation::Kind::jacobi: return "jacobi";
        case Violation::Kind::action_grading: return "action grading";
        case Violation::Kind::action_compatibility: return "action bracket compatibility";
        case Violation::Kind::action_derivation: return "action derivation rule";
        case Violation::Kind::rce_parity: return "sigma parity";
        case Violation::Kind::rce_homomorphism: return "sigma homomorphism";
        case Violation::Kind::rce_image: return "image condition";
        case Violation::Kind::rce_equivariance: return "equivariance condition";
        case Violation::Kind::rce_self_action: return "self-action condition";
        case Violation::Kind::rce_kernel_central: return "central kernel condition";
    }
    return "unknown";
}

std::string ValidationReport::str() const {
    if (ok()) return "valid";
    std::string out;
    for (const Violation& v : violations) {
        out += violation_kind_name(v.kind);
        out += " at (";
        for (int k = 0; k < 3; ++k) {
            if (v.where[k] < 0) break;
            if (k) out += ",";
            out += std::to_string(v.where[k] + 1);
        }
        out += ")";
        if (!v.detail.empty()) out += ": " + v.detail;
        out += "\n";
    }
    return out;
}

SuperAlgebra SuperAlgebra::from_table(std::vector<std::string> even_names,
                                      std::vector<std::string> odd_names,
                                      std::vector<std::vector<Vec>> sc) {
    SuperAlgebra a;
    a.even_dim_ = static_cast<int>(even_names.size());
    a.names_ = std::move(even_names);
    a.names_.insert(a.names_.end(), odd_names.begin(), odd_names.end());
    const size_t d = a.names_.size();
    if (sc.size() != d) throw std::invalid_argument("structure constant table: wrong row count");
    for (const auto& row : sc) {
        if (row.size() != d)
            throw std::invalid_argument("structure constant table: wrong column count");
        for (const Vec& v : row)
            if (v.size() != d)
                throw std::invalid_argument("structure constant table: wrong vector length");
    }
    a.sc_ = std::move(sc);
    return a;
}

SuperAlgebra::Builder::Builder(std::vector<std::string> even_names,
                               std::vector<std::string> odd_names)
    : even_(std::move(even_names)), odd_(std::move(odd_names)) {
    const size_t d = even_.size() + odd_.size();
    sc_.assign(d, std::vector<Vec>(d, Vec(d)));
    given_.assign(d, std::vector<bool>(d, false));
}

SuperAlgebra::Builder& SuperAlgebra::Builder::set_bracket(int i, int j, Vec value) {
    const int d = dim();
    if (i < 0 || i >= d || j < 0 || j >= d)
        throw std::invalid_argument("set_bracket: basis index out of range");
    if (static_cast<int>(value.size()) != d)
        throw std::invalid_argument("set_bracket: wrong vector length");

    const Parity pi = parity(i);
    const Parity pj = parity(j);
    // Canonical orientation: smaller index first; (even, odd) for mixed pairs.
    const bool canonical = (pi == pj) ? (i <= j) : (pi == Parity::even);
    int ci = i, cj = j;
    if (!canonical) {
        std::swap(ci, cj);
        // [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]
        value = vec_scaled(value, Rat(-koszul_power(pi, pj)));
    }
    if (ci == cj && pi == Parity::even && !vec_is_zero(value))
        throw std::invalid_argument("set_bracket: [x,x] must vanish for even x ('" + label(ci) +
                                    "')");
    if (given_[ci][cj])
        throw std::invalid_argument("set_bracket: bracket [" + label(ci) + "," + label(cj) +
                                    "] specified twice");
    given_[ci][cj] = true;
    sc_[ci][cj] = std::move(value);
    return *this;
}

SuperAlgebra::Builder& SuperAlgebra::Builder::set_component(int i, int j, int k, const Rat& c) {
    Vec v(dim());
    if (k < 0 || k >= dim())
        throw std::invalid_argument("set_component: target index out of range");
    v[k] = c;
    return set_bracket(i, j, std::move(v));
}

SuperAlgebra SuperAlgebra::Builder::build() {
    const int d = dim();
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            // Mirror the canonical slot (i, j) into (j, i).
            sc_[j][i] = vec_scaled(sc_[i][j], Rat(-koszul_power(parity(i), parity(j))));
    return SuperAlgebra::from_table(even_, odd_, std::move(sc_));
}

std::optional<int> SuperAlgebra::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

Vec SuperAlgebra::bracket(const Vec& x, const Vec& y) const {
    const int d = dim();
    if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
        throw std::invalid_argument("bracket: vector length does not match algebra dimension");
    Vec out(d);
    for (int i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            vec_axpy(out, x[i] * y[j], sc_[i][j]);
        }
    }
    return out;
}

Vec SuperAlgebra::basis_vector(int i) const {
    Vec v(dim());
    v[i] = Rat(1);
    return v;
}

std::optional<Parity> SuperAlgebra::homogeneous_parity(const Vec& v) const {
    bool has_even = false, has_odd = false;
    for (int i = 0; i < dim(); ++i)
        if (!v[i].is_zero()) (parity(i) == Parity::even ? has_even : has_odd) = true;
    if (has_even == has_odd) return std::nullopt;  // zero or mixed
    return has_even ? Parity::even : Parity::odd;
}

ValidationReport SuperAlgebra::validate() const {
    ValidationReport report;
    const int d = dim();

    // Grading: c_{ij}^k = 0 unless |k| = |i| + |j|.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Parity want = parity(i) + parity(j);
            for (int k = 0; k < d; ++k)
                if (!sc_[i][j][k].is_zero() && parity(k) != want) {
                    report.violations.push_back(
                        {Violation::Kind::grading,
                         {i, j, k},
                         "[" + names_[i] + "," + names_[j] + "] has a component of wrong parity at " +
                             names_[k]});
                    break;
                }
        }

    // Super antisymmetry: c_{ji} = -(-1)^{|i||j|} c_{ij}.
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const Rat s(-koszul_power(parity(i), parity(j)));
            for (int k = 0; k < d; ++k)
                if (sc_[j][i][k] != s * sc_[i][j][k]) {
                    report.violations.push_back(
                        {Violation::Kind::antisymmetry,
                         {i, j, k},
                         "[" + names_[j] + "," + names_[i] + "] incompatible with [" +
                             names_[i] + "," + names_[j] + "] at " + names_[k]});
                    break;
                }
        }

    // Graded Jacobi on basis triples:
    // (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0.
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
            for (int k = j; k < d; ++k) {
                Vec sum(d);
                vec_axpy(sum, Rat(koszul_power(parity(i), parity(k))),
                         bracket(basis_vector(i), sc_[j][k]));
                vec_axpy(sum, Rat(koszul_power(parity(j), parity(i))),
                         bracket(basis_vector(j), sc_[k][i]));
                vec_axpy(sum, Rat(koszul_power(parity(k), parity(j))),
                         bracket(basis_vector(k), sc_[i][j]));
                if (!vec_is_zero(sum)) {
                    int witness = 0;
                    while (sum[witness].is_zero()) ++witness;
                    report.violations.push_back(
                        {Violation::Kind::jacobi,
                         {i, j, k},
                         "cyclic sum has component " + sum[witness].str() + " at " +
                             names_[witness]});
                }
            }
    return report;
}

bool SuperAlgebra::is_abelian() const {
    for (const auto& row : sc_)
        for (const Vec& v : row)
            if (!vec_is_zero(v)) return false;
    return true;
}

}  // namespace superschur
