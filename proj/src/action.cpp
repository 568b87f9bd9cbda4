#include "superschur/action.hpp"

#include <set>
#include <stdexcept>

namespace superschur {

ActionTable ActionTable::trivial(const SuperAlgebra& l, const SuperAlgebra& m) {
    ActionTable act{l, m, {}};
    act.table.assign(l.dim(), std::vector<Vec>(m.dim(), Vec(m.dim())));
    return act;
}

Vec ActionTable::apply(const Vec& l, const Vec& m) const {
    if (static_cast<int>(l.size()) != acting.dim() || static_cast<int>(m.size()) != acted.dim())
        throw std::invalid_argument("action apply: vector length mismatch");
    Vec out(acted.dim());
    for (int i = 0; i < acting.dim(); ++i) {
        if (l[i].is_zero()) continue;
        for (int j = 0; j < acted.dim(); ++j) {
            if (m[j].is_zero()) continue;
            vec_axpy(out, l[i] * m[j], table[i][j]);
        }
    }
    return out;
}

ValidationReport validate_action(const ActionTable& act) {
    ValidationReport report;
    const SuperAlgebra& l = act.acting;
    const SuperAlgebra& m = act.acted;
    if (static_cast<int>(act.table.size()) != l.dim())
        throw std::invalid_argument("action table: wrong acting dimension");
    for (const auto& row : act.table) {
        if (static_cast<int>(row.size()) != m.dim())
            throw std::invalid_argument("action table: wrong acted dimension");
        for (const Vec& v : row)
            if (static_cast<int>(v.size()) != m.dim())
                throw std::invalid_argument("action table: wrong vector length");
    }

    // (i) ^l m in M_{|l|+|m|}
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const Parity want = l.parity(i) + m.parity(j);
            const Vec& im = act.table[i][j];
            for (int k = 0; k < m.dim(); ++k)
                if (!im[k].is_zero() && m.parity(k) != want) {
                    report.violations.push_back({Violation::Kind::action_grading,
                                                 {i, j, k},
                                                 "image of (" + l.name(i) + ", " + m.name(j) +
                                                     ") has a wrong-parity component at " +
                                                     m.name(k)});
                    break;
                }
        }

    // (ii) ^{[l,l']}m = ^l(^{l'}m) - (-1)^{|l||l'|} ^{l'}(^l m)
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j)
            for (int k = 0; k < m.dim(); ++k) {
                Vec lhs = act.apply(l.basis_bracket(i, j), m.basis_vector(k));
                Vec rhs = act.apply(l.basis_vector(i), act.table[j][k]);
                vec_axpy(rhs, Rat(-koszul_power(l.parity(i), l.parity(j))),
                         act.apply(l.basis_vector(j), act.table[i][k]));
                vec_axpy(lhs, Rat(-1), rhs);
                if (!vec_is_zero(lhs)) {
                    report.violations.push_back({Violation::Kind::action_compatibility,
                                                 {i, j, k},
                                                 "fails on (" + l.name(i) + ", " + l.name(j) +
                                                     ", " + m.name(k) + ")"});
                }
            }

    // (iii) ^l[m,m'] = [^l m, m'] + (-1)^{|l||m|}[m, ^l m']
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            for (int k = 0; k < m.dim(); ++k) {
                Vec lhs = act.apply(l.basis_vector(i), m.basis_bracket(j, k));
                Vec rhs = m.bracket(act.table[i][j], m.basis_vector(k));
                vec_axpy(rhs, Rat(koszul_power(l.parity(i), m.parity(j))),
                         m.bracket(m.basis_vector(j), act.table[i][k]));
                vec_axpy(lhs, Rat(-1), rhs);
                if (!vec_is_zero(lhs)) {
                    report.violations.push_back({Violation::Kind::action_derivation,
                                                 {i, j, k},
                                                 "fails on (" + l.name(i) + ", " + m.name(j) +
                                                     ", " + m.name(k) + ")"});
                }
            }
    return report;
}

SuperAlgebra semidirect(const SuperAlgebra& m, const SuperAlgebra& l, const ActionTable& act) {
    if (!(act.acting == l) || !(act.acted == m))
        throw std::invalid_argument("semidirect: action table does not match the factors");
    if (!validate_action(act).ok())
        throw std::invalid_argument("semidirect: action fails the action axioms");

    std::set<std::string> taken(m.names().begin(), m.names().end());
    auto uniq = [&](const std::string& name) {
        std::string out = name;
        while (taken.count(out)) out += "'";
        taken.insert(out);
        return out;
    };
    std::vector<std::string> even_names, odd_names;
    for (int i = 0; i < m.even_dim(); ++i) even_names.push_back(m.name(i));
    for (int i = 0; i < l.even_dim(); ++i) even_names.push_back(uniq(l.name(i)));
    for (int i = m.even_dim(); i < m.dim(); ++i) odd_names.push_back(m.name(i));
    for (int i = l.even_dim(); i < l.dim(); ++i) odd_names.push_back(uniq(l.name(i)));

    const int d = m.dim() + l.dim();
    auto m_pos = [&](int i) { return i < m.even_dim() ? i : l.even_dim() + i; };
    auto l_pos = [&](int i) {
        return i < l.even_dim() ? m.even_dim() + i : m.even_dim() + m.odd_dim() + i;
    };
    std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d)));
    auto embed_m = [&](const Vec& v, Vec& out) {
        for (int k = 0; k < m.dim(); ++k) out[m_pos(k)] = v[k];
    };
    // [(m,0),(m',0)] = ([m,m'], 0)
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) embed_m(m.basis_bracket(i, j), table[m_pos(i)][m_pos(j)]);
    // [(0,l),(0,l')] = (0, [l,l'])
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j) {
            const Vec& br = l.basis_bracket(i, j);
            for (int k = 0; k < l.dim(); ++k) table[l_pos(i)][l_pos(j)][l_pos(k)] = br[k];
        }
    // [(0,l),(m',0)] = (^l m', 0) and [(m,0),(0,l')] = (-(-1)^{|m||l'|} ^{l'} m, 0)
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            embed_m(act.table[i][j], table[l_pos(i)][m_pos(j)]);
            const Rat s(-koszul_power(m.parity(j), l.parity(i)));
            embed_m(vec_scaled(act.table[i][j], s), table[m_pos(j)][l_pos(i)]);
        }
    return SuperAlgebra::from_table(even_names, odd_names, std::move(table));
}

GradedSubspace semidirect_ideal_m(const SuperAlgebra& m, const SuperAlgebra& l) {
    const Dims ambient{m.even_dim() + l.even_dim(), m.odd_dim() + l.odd_dim()};
    const int d = ambient.total();
    std::vector<Vec> rows;
    for (int i = 0; i < m.dim(); ++i) {
        Vec v(d);
        const int pos = i < m.even_dim() ? i : l.even_dim() + i;
        v[pos] = Rat(1);
        rows.push_back(std::move(v));
    }
    return GradedSubspace::span(ambient, rows);
}

AdjointActionResult adjoint_action_on_ideal(const SuperAlgebra& a, const GradedSubspace& u) {
    if (!is_graded_ideal(a, u))
        throw std::invalid_argument("adjoint_action_on_ideal: subspace is not a graded ideal");
    SubalgebraResult sub = restrict_to_subalgebra(a, u);  // ideals are subalgebras
    const std::vector<Vec> rows = u.basis();
    ActionTable act{a, sub.algebra, {}};
    act.table.assign(a.dim(), std::vector<Vec>(rows.size()));
    for (int i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) {
            const Vec br = a.bracket(a.basis_vector(i), rows[j]);
            auto coords = u.coordinates(br);
            if (!coords)
                throw std::logic_error("adjoint_action_on_ideal: bracket escaped the ideal");
            act.table[i][j] = std::move(*coords);
        }
    return {std::move(sub.algebra), std::move(act)};
}

}  // namespace superschur
