#include "superschur/bounds.hpp"

#include <stdexcept>

#include "superschur/homology.hpp"
#include "superschur/pairs.hpp"
#include "superschur/subspace.hpp"

namespace superschur {

int nayak_bound(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("nayak_bound: negative dimension");
    return ((m + n) * (m + n) + (n - m)) / 2;
}

int commutator_bound(Dims dim_n_mod_center, Dims dim_l_over_n) {
    return nayak_bound(dim_n_mod_center.even, dim_n_mod_center.odd) +
           dim_n_mod_center.total() * dim_l_over_n.total();
}

int pair_multiplier_bound(Dims dim_n, Dims dim_l_over_n, int dim_commutator_nl,
                          bool include_commutator) {
    int bound = nayak_bound(dim_n.even, dim_n.odd) + dim_n.total() * dim_l_over_n.total();
    if (include_commutator) bound -= dim_commutator_nl;
    return bound;
}

int heisenberg_multiplier_formula(HeisenbergKind kind, int m, int n) {
    if (kind == HeisenbergKind::odd_center) {
        if (n < 1) throw std::invalid_argument("heisenberg_multiplier_formula: odd center needs n >= 1");
        return n == 1 ? 2 : 2 * n * n - 1;
    }
    if (m < 0 || n < 0 || m + n < 1)
        throw std::invalid_argument("heisenberg_multiplier_formula: even center needs m + n >= 1");
    if (m == 0 && n == 1) return 0;
    if (m == 1 && n == 0) return 2;
    return 2 * m * m - m - 1 + 2 * m * n + n * (n + 1) / 2;
}

int defect_t(const SuperAlgebra& a) { return multiplier_dim(a).defect_t; }

int defect_t_pair(const PairPresentation& p) { return pair_multiplier(p).defect_t; }

std::string CheckResult::status_str() const {
    switch (status) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::vacuous: return "vacuous";
        case Status::hypothesis_unmet: return "hypothesis unmet";
    }
    return "unknown";
}

CheckResult check_pair_defect_one(const PairPresentation& p) {
    CheckResult res;
    if (!nilpotency_class(p.l)) {
        res.status = CheckResult::Status::hypothesis_unmet;
        res.detail = "L is not nilpotent";
        return res;
    }
    const PairMultiplierReport rep = pair_multiplier(p);
    if (rep.defect_t != 1) {
        res.status = CheckResult::Status::vacuous;
        res.detail = "pair defect is " + std::to_string(rep.defect_t) + ", not 1";
        return res;
    }
    if (p.l.is_abelian()) {
        res.status = CheckResult::Status::fail;
        res.detail = "defect 1 with abelian L";
        return res;
    }
    const GradedSubspace nl = commutator_subspace(p.l, p.n, GradedSubspace::full(p.l.dims()));
    if (nl.is_zero()) {
        res.status = CheckResult::Status::pass;
        res.detail = "[N,L] = 0";
        return res;
    }
    const GradedSubspace znl = pair_center(p.l, p.n);
    if (nl.dim().total() == 1 && nl == znl) {
        res.status = CheckResult::Status::pass;
        res.detail = "dim [N,L] = 1 and [N,L] = Z(N,L)";
        return res;
    }
    res.status = CheckResult::Status::fail;
    res.detail = "dim [N,L] = " + std::to_string(nl.dim().total()) +
                 (nl == znl ? ", [N,L] = Z(N,L)" : ", [N,L] != Z(N,L)");
    return res;
}

bool is_heisenberg_h1(const SuperAlgebra& a) {
    if (!(a.dims() == Dims{3, 0})) return false;
    const GradedSubspace derived =
        commutator_subspace(a, GradedSubspace::full(a.dims()), GradedSubspace::full(a.dims()));
    return derived.dim().total() == 1 && derived == center(a);
}

CheckResult check_defect_one_characterization(const SuperAlgebra& a) {
    CheckResult res;
    if (!nilpotency_class(a)) {
        res.status = CheckResult::Status::hypothesis_unmet;
        res.detail = "algebra is not nilpotent";
        return res;
    }
    const int t = defect_t(a);
    const bool recognized = is_heisenberg_h1(a);
    if ((t == 1) == recognized) {
        res.status = CheckResult::Status::pass;
        res.detail = t == 1 ? "defect 1 and Heisenberg of dimension (3|0)"
                            : "defect " + std::to_string(t) + ", not Heisenberg (3|0)";
    } else {
        res.status = CheckResult::Status::fail;
        res.detail = "defect " + std::to_string(t) + " but recognizer says " +
                     (recognized ? "Heisenberg (3|0)" : "not Heisenberg (3|0)");
    }
    return res;
}

}  // namespace superschur
