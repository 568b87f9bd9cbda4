#include "superschur/pairs.hpp"

#include <stdexcept>

#include "superschur/bounds.hpp"

namespace superschur {

std::string ComplementReport::str() const {
    std::string out = ok ? "complement verified" : "not a complement";
    out += " (subalgebra: ";
    out += is_subalgebra ? "yes" : "no";
    out += ", trivial intersection: ";
    out += trivial_intersection ? "yes" : "no";
    out += ", dimensions add: ";
    out += dims_add ? "yes" : "no";
    out += ", ideal: ";
    out += is_ideal ? "yes" : "no";
    out += ")";
    return out;
}

ComplementReport verify_complement(const PairPresentation& p) {
    if (!p.k) throw std::invalid_argument("verify_complement: no complement supplied");
    ComplementReport rep;
    const GradedSubspace& k = *p.k;
    rep.is_subalgebra = is_subalgebra(p.l, k);
    rep.is_ideal = is_graded_ideal(p.l, k);
    rep.trivial_intersection = subspace_intersection(p.n, k).is_zero();
    rep.dims_add = p.n.dim() + k.dim() == p.l.dims();
    rep.ok = rep.is_subalgebra && rep.trivial_intersection && rep.dims_add;
    return rep;
}

namespace {

// Subsets of {0..total-1} of the given size, lexicographic.
void subsets_rec(int total, int size, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= total - (size - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        subsets_rec(total, size, i + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> subsets(int total, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(total, size, 0, cur, out);
    return out;
}

}  // namespace

std::optional<GradedSubspace> find_complement(const SuperAlgebra& l, const GradedSubspace& n) {
    if (!is_graded_ideal(l, n))
        throw std::invalid_argument("find_complement: N is not a graded ideal");
    const Dims need = l.dims() - n.dim();
    for (const auto& even_set : subsets(l.even_dim(), need.even)) {
        for (const auto& odd_set : subsets(l.odd_dim(), need.odd)) {
            std::vector<Vec> rows;
            for (int i : even_set) rows.push_back(l.basis_vector(i));
            for (int i : odd_set) rows.push_back(l.basis_vector(l.even_dim() + i));
            GradedSubspace k = GradedSubspace::span(l.dims(), rows);
            PairPresentation cand{l, n, k};
            if (verify_complement(cand).ok) return k;
        }
    }
    return std::nullopt;
}

PairMultiplierReport pair_multiplier(const PairPresentation& p) {
    if (!is_graded_ideal(p.l, p.n))
        throw std::invalid_argument("pair_multiplier: N is not a graded ideal");

    std::optional<GradedSubspace> k;
    if (p.k) {
        const ComplementReport check = verify_complement(p);
        if (!check.ok)
            throw std::invalid_argument("pair_multiplier: supplied complement fails: " +
                                        check.str());
        k = *p.k;
    } else {
        k = find_complement(p.l, p.n);
    }
    if (!k)
        throw UnsupportedPairError(
            "pair (N,L) has no subalgebra complement; the decomposition of M(L) does not apply");

    PairMultiplierReport rep;
    rep.complement = *k;
    rep.complement_is_ideal = is_graded_ideal(p.l, *k);
    rep.dim_n = p.n.dim();

    const QuotientResult q = quotient(p.l, p.n);
    rep.dim_quotient = q.algebra.dims();
    rep.dim_multiplier_l = multiplier_dim(p.l).dim_multiplier;
    rep.dim_multiplier_quotient = multiplier_dim(q.algebra).dim_multiplier;
    rep.dim_multiplier_pair = rep.dim_multiplier_l - rep.dim_multiplier_quotient;
    if (rep.dim_multiplier_pair < 0)
        throw std::logic_error("pair_multiplier: negative pair multiplier dimension");

    rep.dim_commutator_nl =
        commutator_subspace(p.l, p.n, GradedSubspace::full(p.l.dims())).dim();
    rep.dim_center_nl = pair_center(p.l, p.n).dim();
    rep.bound_pair = pair_multiplier_bound(rep.dim_n, rep.dim_quotient, 0, false);
    rep.bound_pair_refined =
        pair_multiplier_bound(rep.dim_n, rep.dim_quotient, rep.dim_commutator_nl.total(), true);
    rep.defect_t = rep.bound_pair - rep.dim_multiplier_pair;
    return rep;
}

namespace {

Vec sigma_apply(const RelativeCentralExtension& e, const Vec& m_vec) {
    return e.sigma.apply(m_vec);
}

}  // namespace

ValidationReport validate_rce(const RelativeCentralExtension& e) {
    ValidationReport report;
    const int dm = e.m.dim(), dl = e.l.dim();
    if (e.sigma.rows() != dl || e.sigma.cols() != dm)
        throw std::invalid_argument("validate_rce: sigma has the wrong shape");
    if (!(e.act.acting == e.l) || !(e.act.acted == e.m))
        throw std::invalid_argument("validate_rce: action table does not match M and L");

    // sigma parity-preserving: columns are homogeneous of the source parity.
    for (int j = 0; j < dm; ++j) {
        const Parity pj = e.m.parity(j);
        for (int i = 0; i < dl; ++i)
            if (!e.sigma.at(i, j).is_zero() && e.l.parity(i) != pj) {
                report.violations.push_back({Violation::Kind::rce_parity,
                                             {j, i, -1},
                                             "sigma(" + e.m.name(j) +
                                                 ") has a wrong-parity component at " +
                                                 e.l.name(i)});
                break;
            }
    }

    // sigma homomorphism: sigma([m, m']) = [sigma m, sigma m'].
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j) {
            Vec lhs = sigma_apply(e, e.m.basis_bracket(i, j));
            Vec rhs = e.l.bracket(e.sigma.apply(e.m.basis_vector(i)),
                                  e.sigma.apply(e.m.basis_vector(j)));
            vec_axpy(lhs, Rat(-1), rhs);
            if (!vec_is_zero(lhs))
                report.violations.push_back({Violation::Kind::rce_homomorphism,
                                             {i, j, -1},
                                             "fails on (" + e.m.name(i) + ", " + e.m.name(j) + ")"});
        }

    // (i) sigma(M) = N
    std::vector<Vec> image_rows;
    for (int j = 0; j < dm; ++j) image_rows.push_back(e.sigma.apply(e.m.basis_vector(j)));
    GradedSubspace image = GradedSubspace::span(e.l.dims(), image_rows);
    if (!(image == e.n))
        report.violations.push_back({Violation::Kind::rce_image,
                                     {-1, -1, -1},
                                     "sigma(M) has dimension " + image.dim().str() +
                                         ", expected N of dimension " + e.n.dim().str()});

    // (ii) sigma(^l m) = [l, sigma(m)]
    for (int i = 0; i < dl; ++i)
        for (int j = 0; j < dm; ++j) {
            Vec lhs = sigma_apply(e, e.act.table[i][j]);
            Vec rhs = e.l.bracket(e.l.basis_vector(i), e.sigma.apply(e.m.basis_vector(j)));
            vec_axpy(lhs, Rat(-1), rhs);
            if (!vec_is_zero(lhs))
                report.violations.push_back({Violation::Kind::rce_equivariance,
                                             {i, j, -1},
                                             "fails on (" + e.l.name(i) + ", " + e.m.name(j) + ")"});
        }

    // (iii) ^{sigma(m')} m = [m', m]
    for (int i = 0; i < dm; ++i)
        for (int j = 0; j < dm; ++j) {
            Vec lhs = e.act.apply(e.sigma.apply(e.m.basis_vector(i)), e.m.basis_vector(j));
            vec_axpy(lhs, Rat(-1), e.m.basis_bracket(i, j));
            if (!vec_is_zero(lhs))
                report.violations.push_back({Violation::Kind::rce_self_action,
                                             {i, j, -1},
                                             "fails on (" + e.m.name(i) + ", " + e.m.name(j) + ")"});
        }

    // (iv) ker sigma inside Z(M,L) = {m : ^l m = 0 for all l}
    const GradedSubspace kernel = rce_kernel(e);
    for (const Vec& v : kernel.basis())
        for (int i = 0; i < dl; ++i) {
            if (!vec_is_zero(e.act.apply(e.l.basis_vector(i), v))) {
                report.violations.push_back({Violation::Kind::rce_kernel_central,
                                             {i, -1, -1},
                                             "a kernel vector is moved by " + e.l.name(i)});
                break;
            }
        }
    return report;
}

GradedSubspace rce_kernel(const RelativeCentralExtension& e) {
    const int dm = e.m.dim();
    std::vector<Vec> rows;
    auto block = [&](int lo, int hi) {
        if (hi == lo) return;
        RatMatrix m(e.l.dim(), hi - lo);
        for (int c = lo; c < hi; ++c)
            for (int r = 0; r < e.l.dim(); ++r) m.at(r, c - lo) = e.sigma.at(r, c);
        for (const Vec& sol : nullspace(m)) {
            Vec v(dm);
            for (int c = lo; c < hi; ++c) v[c] = sol[c - lo];
            rows.push_back(std::move(v));
        }
    };
    block(0, e.m.even_dim());
    block(e.m.even_dim(), dm);
    return GradedSubspace::span(e.m.dims(), rows);
}

GradedSubspace rce_action_commutator(const RelativeCentralExtension& e) {
    std::vector<Vec> rows;
    for (int i = 0; i < e.l.dim(); ++i)
        for (int j = 0; j < e.m.dim(); ++j) rows.push_back(e.act.table[i][j]);
    return GradedSubspace::span(e.m.dims(), rows);
}

CoverCheck is_cover_candidate(const RelativeCentralExtension& e, const PairPresentation& p) {
    if (!(p.l == e.l))
        throw std::invalid_argument("is_cover_candidate: pair and extension disagree on L");
    if (!(p.n == e.n))
        throw std::invalid_argument("is_cover_candidate: pair and extension disagree on N");
    if (!validate_rce(e).ok())
        throw std::invalid_argument("is_cover_candidate: not a relative central extension");

    CoverCheck check;
    const GradedSubspace kernel = rce_kernel(e);
    const GradedSubspace commutator = rce_action_commutator(e);
    check.dim_kernel = kernel.dim().total();
    check.dim_pair_multiplier = pair_multiplier(p).dim_multiplier_pair;
    check.kernel_in_commutator = commutator.contains(kernel);
    check.ok = check.dim_kernel == check.dim_pair_multiplier && check.kernel_in_commutator;
    if (!check.ok) {
        check.detail = check.kernel_in_commutator
                           ? "kernel dimension differs from dim M(N,L)"
                           : "kernel is not contained in [M,L]";
    }
    return check;
}

}  // namespace superschur
