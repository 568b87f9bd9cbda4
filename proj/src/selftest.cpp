#include "superschur/selftest.hpp"

#include <chrono>

#include "superschur/bounds.hpp"
#include "superschur/catalog.hpp"
#include "superschur/homology.hpp"
#include "superschur/pairs.hpp"
#include "superschur/randomgen.hpp"
#include "superschur/subspace.hpp"

namespace superschur {

namespace {

std::vector<GradedSubspace> ideal_candidates(const SuperAlgebra& l) {
    std::vector<GradedSubspace> cands;
    auto add = [&](GradedSubspace s) {
        if (!is_graded_ideal(l, s)) return;
        for (const auto& c : cands)
            if (c == s) return;
        cands.push_back(std::move(s));
    };
    add(GradedSubspace::full(l.dims()));
    add(GradedSubspace::zero(l.dims()));
    add(center(l));
    const auto series = lower_central_series(l);
    for (size_t i = 1; i < series.size(); ++i) add(series[i]);
    if (l.dim() <= 4) {
        for (unsigned mask = 0; mask < (1u << l.dim()); ++mask) {
            std::vector<Vec> rows;
            for (int i = 0; i < l.dim(); ++i)
                if (mask & (1u << i)) rows.push_back(l.basis_vector(i));
            add(GradedSubspace::span(l.dims(), rows));
        }
    } else {
        std::vector<Vec> even_rows, odd_rows;
        for (int i = 0; i < l.dim(); ++i) {
            add(GradedSubspace::span(l.dims(), {l.basis_vector(i)}));
            (i < l.even_dim() ? even_rows : odd_rows).push_back(l.basis_vector(i));
        }
        add(GradedSubspace::span(l.dims(), even_rows));
        add(GradedSubspace::span(l.dims(), odd_rows));
    }
    return cands;
}

struct PairCase {
    std::string id;
    PairPresentation pair;
    PairMultiplierReport report;
};

struct Population {
    std::vector<CatalogEntry> catalog;
    std::vector<SuperAlgebra> random_algebras;
    std::vector<PairCase> pairs;  // complemented catalog pairs
};

Population build_population(const SelftestOptions& options) {
    Population pop;
    pop.catalog = enumerate_catalog(options.max_dim);
    Rng rng(options.seed);
    for (int i = 0; i < options.random_algebras; ++i)
        pop.random_algebras.push_back(random_valid_algebra(rng, {4, 4}));
    for (const CatalogEntry& entry : pop.catalog)
        for (GradedSubspace& n : ideal_candidates(entry.algebra)) {
            auto k = find_complement(entry.algebra, n);
            if (!k) continue;
            PairPresentation p{entry.algebra, std::move(n), std::move(k)};
            PairMultiplierReport rep = pair_multiplier(p);
            pop.pairs.push_back(
                {entry.id + " with N of dim " + rep.dim_n.str(), std::move(p), std::move(rep)});
        }
    return pop;
}

using Clock = std::chrono::steady_clock;

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options, std::ostream* out) {
    SelftestReport report;
    const auto t0 = Clock::now();
    const Population pop = build_population(options);

    auto run = [&](int id, const std::string& name, auto&& body) {
        CriterionResult res;
        res.id = id;
        res.name = name;
        res.passed = true;
        int count = 0;
        auto fail = [&](const std::string& witness) {
            if (res.passed) res.detail = witness;  // keep the first witness
            res.passed = false;
        };
        body(count, fail);
        if (res.passed) res.detail = std::to_string(count) + " checks";
        report.criteria.push_back(res);
        if (out)
            *out << (res.passed ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << " ("
                 << res.detail << ")\n";
    };

    run(1, "Heisenberg even-center multiplier table", [&](int& count, auto fail) {
        for (int m = 0; m <= 4; ++m)
            for (int n = (m == 0 ? 1 : 0); m + n <= 4; ++n) {
                const int got = multiplier_dim(heisenberg_even(m, n)).dim_multiplier;
                const int want =
                    heisenberg_multiplier_formula(HeisenbergKind::even_center, m, n);
                ++count;
                if (got != want)
                    fail("H_even(" + std::to_string(m) + "," + std::to_string(n) + "): got " +
                         std::to_string(got) + ", formula " + std::to_string(want));
            }
    });

    run(2, "Heisenberg odd-center multiplier table", [&](int& count, auto fail) {
        for (int n = 1; n <= 3; ++n) {
            const int got = multiplier_dim(heisenberg_odd(n)).dim_multiplier;
            const int want = heisenberg_multiplier_formula(HeisenbergKind::odd_center, 0, n);
            ++count;
            if (got != want)
                fail("H_odd(" + std::to_string(n) + "): got " + std::to_string(got) +
                     ", formula " + std::to_string(want));
        }
    });

    run(3, "abelian equality and non-abelian strictness", [&](int& count, auto fail) {
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n) {
                const int got = multiplier_dim(abelian(m, n)).dim_multiplier;
                ++count;
                if (got != nayak_bound(m, n))
                    fail("abelian(" + std::to_string(m) + "|" + std::to_string(n) + "): got " +
                         std::to_string(got) + ", bound " + std::to_string(nayak_bound(m, n)));
            }
        for (const CatalogEntry& entry : pop.catalog) {
            const MultiplierReport rep = multiplier_dim(entry.algebra);
            ++count;
            if (entry.algebra.is_abelian() ? rep.defect_t != 0 : rep.defect_t <= 0)
                fail(entry.id + ": defect " + std::to_string(rep.defect_t) +
                     (entry.algebra.is_abelian() ? " on an abelian algebra" : " not positive"));
        }
    });

    run(4, "defect-one characterizations", [&](int& count, auto fail) {
        int hits_even_part = 0, hits_all = 0;
        for (const CatalogEntry& entry : pop.catalog) {
            if (!nilpotency_class(entry.algebra)) continue;
            const bool defect_one = defect_t(entry.algebra) == 1;
            const bool recognized = is_heisenberg_h1(entry.algebra);
            if (entry.algebra.odd_dim() == 0) {
                ++count;
                if (defect_one != recognized)
                    fail(entry.id + ": defect-1 and Heisenberg(3|0) recognition disagree");
                if (defect_one) ++hits_even_part;
            }
            ++count;
            const CheckResult check = check_defect_one_characterization(entry.algebra);
            if (!check.passed()) fail(entry.id + ": " + check.detail);
            if (defect_one) ++hits_all;
        }
        if (hits_even_part != 1)
            fail("expected exactly one defect-1 Lie-algebra entry, saw " +
                 std::to_string(hits_even_part));
        if (hits_all != 1)
            fail("expected exactly one defect-1 nilpotent entry, saw " + std::to_string(hits_all));
    });

    run(5, "dimension bounds over the population", [&](int& count, auto fail) {
        auto check_algebra = [&](const std::string& id, const SuperAlgebra& a) {
            const GradedSubspace full = GradedSubspace::full(a.dims());
            const int dim_derived = commutator_subspace(a, full, full).dim().total();
            const Dims central = center(a).dim();
            ++count;
            if (dim_derived > commutator_bound(a.dims() - central, {0, 0}))
                fail(id + ": dim L^2 exceeds the commutator bound");
            ++count;
            if (multiplier_dim(a).dim_multiplier > nayak_bound(a.dims().even, a.dims().odd))
                fail(id + ": dim M(L) exceeds the Nayak bound");
        };
        for (const CatalogEntry& entry : pop.catalog) check_algebra(entry.id, entry.algebra);
        for (size_t i = 0; i < pop.random_algebras.size(); ++i)
            check_algebra("random#" + std::to_string(i), pop.random_algebras[i]);
        for (const PairCase& pc : pop.pairs) {
            ++count;
            if (pc.report.dim_multiplier_pair > pc.report.bound_pair_refined)
                fail(pc.id + ": dim M(N,L) exceeds the corollary bound");
            if (pc.report.dim_multiplier_pair > pc.report.bound_pair)
                fail(pc.id + ": dim M(N,L) exceeds the theorem bound");
            if (pc.report.dim_commutator_nl.total() >
                commutator_bound(pc.report.dim_n - pc.report.dim_center_nl,
                                 pc.report.dim_quotient))
                fail(pc.id + ": dim [N,L] exceeds the relative commutator bound");
        }
    });

    run(6, "chain-complex identities", [&](int& count, auto fail) {
        auto check_algebra = [&](const std::string& id, const SuperAlgebra& a) {
            const RatMatrix d2 = build_d2(a);
            const RatMatrix d3 = build_d3(a);
            ++count;
            if (!(d2 * d3).is_zero()) fail(id + ": d2 * d3 is nonzero");
            const GradedSubspace full = GradedSubspace::full(a.dims());
            ++count;
            if (rank(d2) != commutator_subspace(a, full, full).dim().total())
                fail(id + ": rank d2 differs from dim [L,L]");
        };
        for (const CatalogEntry& entry : pop.catalog) check_algebra(entry.id, entry.algebra);
        for (size_t i = 0; i < pop.random_algebras.size(); ++i)
            check_algebra("random#" + std::to_string(i), pop.random_algebras[i]);
    });

    run(7, "pair decomposition", [&](int& count, auto fail) {
        for (const CatalogEntry& entry : pop.catalog) {
            PairPresentation whole{entry.algebra, GradedSubspace::full(entry.algebra.dims()),
                                   GradedSubspace::zero(entry.algebra.dims())};
            ++count;
            if (pair_multiplier(whole).dim_multiplier_pair !=
                multiplier_dim(entry.algebra).dim_multiplier)
                fail(entry.id + ": M(L,L) differs from M(L)");
        }
        int abelian_pairs = 0;
        for (const PairCase& pc : pop.pairs) {
            if (!pc.pair.l.is_abelian()) continue;
            ++count;
            ++abelian_pairs;
            if (pc.report.defect_t != 0)
                fail(pc.id + ": equality fails for abelian L (defect " +
                     std::to_string(pc.report.defect_t) + ")");
        }
        if (abelian_pairs == 0) fail("population contains no abelian pairs");
    });

    run(8, "defect-one pair dichotomy", [&](int& count, auto fail) {
        int defect_one_pairs = 0;
        for (const PairCase& pc : pop.pairs) {
            if (!nilpotency_class(pc.pair.l)) continue;
            const CheckResult check = check_pair_defect_one(pc.pair);
            ++count;
            if (pc.report.defect_t == 1) {
                ++defect_one_pairs;
                if (check.status != CheckResult::Status::pass)
                    fail(pc.id + ": " + check.detail);
            } else if (check.status == CheckResult::Status::fail) {
                fail(pc.id + ": " + check.detail);
            }
        }
        if (defect_one_pairs == 0) fail("population contains no defect-1 nilpotent pairs");
    });

    run(9, "semidirect soundness", [&](int& count, auto fail) {
        Rng rng(options.seed + 1);
        for (int i = 0; i < options.random_actions; ++i) {
            const std::string id = "triple#" + std::to_string(i);
            const ActionTriple triple = random_action_triple(rng);
            ++count;
            if (!validate_action(triple.act).ok()) {
                fail(id + ": generated action fails the axioms");
                continue;
            }
            const SuperAlgebra s = semidirect(triple.m, triple.l, triple.act);
            if (!s.validate().ok()) {
                fail(id + ": semidirect product fails validation");
                continue;
            }
            const GradedSubspace m_emb = semidirect_ideal_m(triple.m, triple.l);
            if (!is_graded_ideal(s, m_emb)) {
                fail(id + ": M does not embed as a graded ideal");
                continue;
            }
            if (!same_structure_constants(restrict_to_subalgebra(s, m_emb).algebra, triple.m)) {
                fail(id + ": embedded M has different structure constants");
                continue;
            }
            if (!same_structure_constants(quotient(s, m_emb).algebra, triple.l))
                fail(id + ": quotient by M is not canonically isomorphic to L");
        }
    });

    report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (out)
        *out << (report.all_passed() ? "PASS" : "FAIL") << "  selftest total ("
             << report.criteria.size() << " criteria, " << report.seconds << "s)\n";
    return report;
}

}  // namespace superschur
