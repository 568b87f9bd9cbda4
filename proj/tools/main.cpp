#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "superschur/bounds.hpp"
#include "superschur/catalog.hpp"
#include "superschur/homology.hpp"
#include "superschur/io.hpp"
#include "superschur/pairs.hpp"
#include "superschur/selftest.hpp"
#include "superschur/subspace.hpp"

namespace {

using nlohmann::ordered_json;
using namespace superschur;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitUnsupportedPair = 3;

std::string vector_str(const SuperAlgebra& a, const Vec& v) {
    std::string out;
    for (int i = 0; i < a.dim(); ++i) {
        if (v[i].is_zero()) continue;
        const Rat c = v[i];
        if (out.empty()) {
            if (c == Rat(-1))
                out += "-";
            else if (c != Rat(1))
                out += c.str() + " ";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            const Rat abs = c.sign() < 0 ? -c : c;
            if (abs != Rat(1)) out += abs.str() + " ";
        }
        out += a.name(i);
    }
    return out.empty() ? "0" : out;
}

ordered_json dims_json(Dims d) { return {{"even", d.even}, {"odd", d.odd}}; }

ordered_json subspace_json(const SuperAlgebra& a, const GradedSubspace& s) {
    ordered_json basis = ordered_json::array();
    for (const Vec& v : s.basis()) basis.push_back(vector_str(a, v));
    return {{"dim", dims_json(s.dim())}, {"basis", std::move(basis)}};
}

ordered_json violations_json(const ValidationReport& report) {
    ordered_json arr = ordered_json::array();
    for (const Violation& v : report.violations) {
        ordered_json where = ordered_json::array();
        for (int idx : v.where)
            if (idx >= 0) where.push_back(idx + 1);
        arr.push_back({{"kind", violation_kind_name(v.kind)},
                       {"where", std::move(where)},
                       {"detail", v.detail}});
    }
    return arr;
}

struct Output {
    bool json = false;
    bool quiet = false;
    void emit(const ordered_json& doc, const std::string& text) const {
        if (json)
            std::cout << doc.dump(2) << "\n";
        else if (!quiet)
            std::cout << text;
    }
};

// Shared by multiplier/pair/analyze: hard-stop on axiom violations.
int require_valid(const AlgebraFile& file, const Output& out) {
    const ValidationReport report = file.algebra.validate();
    if (report.ok()) return kExitOk;
    out.emit({{"name", file.name},
              {"valid", false},
              {"violations", violations_json(report)}},
             "not a Lie superalgebra:\n" + report.str());
    return kExitMathFailure;
}

int cmd_validate(const std::string& path, const Output& out) {
    const AlgebraFile file = load_algebra_file(path);
    const ValidationReport report = file.algebra.validate();
    ordered_json doc{{"name", file.name},
                     {"dim", dims_json(file.algebra.dims())},
                     {"valid", report.ok()},
                     {"violations", violations_json(report)}};
    out.emit(doc, file.name + " dim " + file.algebra.dims().str() + ": " + report.str() + "\n");
    return report.ok() ? kExitOk : kExitMathFailure;
}

int cmd_analyze(const std::string& path, const Output& out) {
    const AlgebraFile file = load_algebra_file(path);
    if (int rc = require_valid(file, out); rc != kExitOk) return rc;
    const SuperAlgebra& a = file.algebra;

    const GradedSubspace full = GradedSubspace::full(a.dims());
    const GradedSubspace z = center(a);
    const GradedSubspace derived = commutator_subspace(a, full, full);
    const auto series = lower_central_series(a);
    const auto cls = nilpotency_class(a);

    ordered_json doc{{"name", file.name}, {"dim", dims_json(a.dims())}};
    doc["center"] = subspace_json(a, z);
    doc["derived"] = subspace_json(a, derived);
    ordered_json series_dims = ordered_json::array();
    for (const auto& term : series) series_dims.push_back(dims_json(term.dim()));
    doc["lower_central_series"] = std::move(series_dims);
    doc["nilpotency_class"] = cls ? ordered_json(*cls) : ordered_json("not nilpotent");

    std::string text = file.name + "  dim " + a.dims().str() + "\n";
    text += "  center Z(L): dim " + z.dim().str() + "\n";
    text += "  derived [L,L]: dim " + derived.dim().str() + "\n";
    text += "  lower central series:";
    for (const auto& term : series) text += " " + term.dim().str();
    text += "\n  nilpotency class: " + (cls ? std::to_string(*cls) : "not nilpotent") + "\n";

    if (file.ideal) {
        if (!is_graded_ideal(a, *file.ideal)) {
            out.emit({{"name", file.name}, {"error", "'ideal' is not a graded ideal"}},
                     "'ideal' is not a graded ideal\n");
            return kExitMathFailure;
        }
        const GradedSubspace znl = pair_center(a, *file.ideal);
        const GradedSubspace nl = commutator_subspace(a, *file.ideal, full);
        doc["pair"] = {{"dim_N", dims_json(file.ideal->dim())},
                       {"center_ZNL", subspace_json(a, znl)},
                       {"commutator_NL", subspace_json(a, nl)}};
        text += "  pair: dim N = " + file.ideal->dim().str() + ", dim Z(N,L) = " +
                znl.dim().str() + ", dim [N,L] = " + nl.dim().str() + "\n";
    }
    out.emit(doc, text);
    return kExitOk;
}

int cmd_multiplier(const std::string& path, const Output& out) {
    const AlgebraFile file = load_algebra_file(path);
    if (int rc = require_valid(file, out); rc != kExitOk) return rc;
    const SuperAlgebra& a = file.algebra;
    const MultiplierReport rep = multiplier_dim(a);
    const CheckResult characterization = check_defect_one_characterization(a);

    ordered_json doc{{"name", file.name},
                     {"dim", dims_json(a.dims())},
                     {"dim_M", rep.dim_multiplier},
                     {"lambda2_dim", rep.lambda2_dim},
                     {"rank_d2", rep.rank_d2},
                     {"rank_d3", rep.rank_d3},
                     {"dim_derived", rep.rank_d2},
                     {"bounds", ordered_json{{"nayak", rep.nayak_bound}}},
                     {"t", rep.defect_t},
                     {"checks", ordered_json{{"defect_one_characterization", characterization.status_str()}}}};

    std::string text = file.name + "  dim " + a.dims().str() + "\n";
    text += "  dim M(L) = " + std::to_string(rep.dim_multiplier) + "\n";
    text += "  lambda2 = " + std::to_string(rep.lambda2_dim) +
            ", rank d2 = " + std::to_string(rep.rank_d2) +
            ", rank d3 = " + std::to_string(rep.rank_d3) + "\n";
    text += "  Nayak bound = " + std::to_string(rep.nayak_bound) +
            ", defect t(L) = " + std::to_string(rep.defect_t) + "\n";
    text += "  defect-one characterization: " + characterization.status_str() +
            (characterization.detail.empty() ? "" : " (" + characterization.detail + ")") + "\n";
    out.emit(doc, text);
    return kExitOk;
}

int cmd_pair(const std::string& path, const std::string& complement_csv, const Output& out) {
    const AlgebraFile file = load_algebra_file(path);
    if (int rc = require_valid(file, out); rc != kExitOk) return rc;
    const SuperAlgebra& a = file.algebra;
    if (!file.ideal) throw ParseError("pair analysis needs an 'ideal' entry in the file");
    if (!is_graded_ideal(a, *file.ideal)) {
        out.emit({{"name", file.name}, {"error", "'ideal' is not a graded ideal"}},
                 "'ideal' is not a graded ideal\n");
        return kExitMathFailure;
    }

    PairPresentation p{a, *file.ideal, file.complement};
    if (!complement_csv.empty()) {
        std::vector<std::string> labels;
        std::string cur;
        for (char c : complement_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) labels.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        p.k = subspace_from_labels(a, labels);
    }

    const PairMultiplierReport rep = pair_multiplier(p);  // throws UnsupportedPairError
    PairPresentation with_k = p;
    with_k.k = rep.complement;
    const CheckResult dichotomy = check_pair_defect_one(with_k);

    ordered_json doc{
        {"name", file.name},
        {"dim", dims_json(a.dims())},
        {"dim_N", dims_json(rep.dim_n)},
        {"dim_quotient", dims_json(rep.dim_quotient)},
        {"dim_M", rep.dim_multiplier_pair},
        {"dim_M_L", rep.dim_multiplier_l},
        {"dim_M_quotient", rep.dim_multiplier_quotient},
        {"dim_commutator_NL", dims_json(rep.dim_commutator_nl)},
        {"dim_center_NL", dims_json(rep.dim_center_nl)},
        {"bounds", ordered_json{{"pair", rep.bound_pair},
                                {"pair_refined", rep.bound_pair_refined},
                                {"relative_commutator",
                                 commutator_bound(rep.dim_n - rep.dim_center_nl, rep.dim_quotient)}}},
        {"t", rep.defect_t},
        {"complement", subspace_json(a, rep.complement)},
        {"complement_is_ideal", rep.complement_is_ideal},
        {"checks", ordered_json{{"defect_one_dichotomy", dichotomy.status_str()}}}};

    std::string text = file.name + "  dim " + a.dims().str() + ", dim N = " + rep.dim_n.str() +
                       ", dim L/N = " + rep.dim_quotient.str() + "\n";
    text += "  dim M(N,L) = " + std::to_string(rep.dim_multiplier_pair) + "  (M(L) = " +
            std::to_string(rep.dim_multiplier_l) + ", M(L/N) = " +
            std::to_string(rep.dim_multiplier_quotient) + ")\n";
    text += "  dim [N,L] = " + rep.dim_commutator_nl.str() + ", dim Z(N,L) = " +
            rep.dim_center_nl.str() + "\n";
    text += "  bounds: pair = " + std::to_string(rep.bound_pair) +
            ", refined = " + std::to_string(rep.bound_pair_refined) +
            ", defect t(N,L) = " + std::to_string(rep.defect_t) + "\n";
    text += "  defect-one dichotomy: " + dichotomy.status_str() +
            (dichotomy.detail.empty() ? "" : " (" + dichotomy.detail + ")") + "\n";
    out.emit(doc, text);
    return kExitOk;
}

int cmd_catalog(const std::string& family, int m, int n, const std::string& out_path,
                const Output& out) {
    SuperAlgebra a;
    std::string id;
    if (family == "abelian") {
        a = abelian(m, n);
        id = "abelian(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    } else if (family == "heisenberg") {
        a = heisenberg_lie(m);
        id = "H(" + std::to_string(m) + ")";
    } else if (family == "heisenberg_even") {
        a = heisenberg_even(m, n);
        id = "H_even(" + std::to_string(m) + "," + std::to_string(n) + ")";
    } else if (family == "heisenberg_odd") {
        a = heisenberg_odd(n);
        id = "H_odd(" + std::to_string(n) + ")";
    } else if (family == "solvable11") {
        a = nonabelian_11(NonAbelian11::solvable);
        id = "solvable(1|1)";
    } else {
        throw ParseError("unknown family '" + family +
                         "'; expected abelian, heisenberg, heisenberg_even, heisenberg_odd or "
                         "solvable11");
    }
    if (!out_path.empty()) {
        save_algebra_file(a, id, out_path);
        if (!out.quiet && !out.json) std::cout << "wrote " << id << " to " << out_path << "\n";
    } else {
        std::cout << algebra_to_json(a, id).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_selftest(int max_dim, std::uint64_t seed, const Output& out) {
    SelftestOptions options;
    options.max_dim = max_dim;
    options.seed = seed;
    const SelftestReport report =
        run_selftest(options, out.json || out.quiet ? nullptr : &std::cout);
    if (out.json) {
        ordered_json criteria = ordered_json::array();
        for (const CriterionResult& c : report.criteria)
            criteria.push_back(
                {{"id", c.id}, {"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
        std::cout << ordered_json{{"criteria", std::move(criteria)},
                                  {"seconds", report.seconds},
                                  {"pass", report.all_passed()}}
                         .dump(2)
                  << "\n";
    }
    return report.all_passed() ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superschur: exact Schur multipliers of Lie superalgebras and pairs"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.json, "machine-readable JSON output");
    app.add_flag("--quiet", out.quiet, "suppress human-readable output");

    std::string path, complement_csv, family, out_path;
    int m = 0, n = 0, max_dim = 6;
    std::uint64_t seed = 0x5eedULL;

    CLI::App* validate = app.add_subcommand("validate", "check the Lie superalgebra axioms");
    validate->add_option("file", path, "algebra file (JSON)")->required();

    CLI::App* analyze =
        app.add_subcommand("analyze", "center, derived subalgebra, lower central series");
    analyze->add_option("file", path, "algebra file (JSON)")->required();

    CLI::App* multiplier = app.add_subcommand("multiplier", "dim M(L) with ranks and bounds");
    multiplier->add_option("file", path, "algebra file (JSON)")->required();

    CLI::App* pair = app.add_subcommand("pair", "dim M(N,L) for the pair in the file");
    pair->add_option("file", path, "algebra file with an 'ideal' entry")->required();
    pair->add_option("--complement", complement_csv, "comma-separated complement labels");

    CLI::App* catalog = app.add_subcommand("catalog", "emit a named family instance");
    catalog->add_option("family", family, "abelian | heisenberg | heisenberg_even | heisenberg_odd | solvable11")
        ->required();
    catalog->add_option("--m", m, "even-part parameter");
    catalog->add_option("--n", n, "odd-part parameter");
    catalog->add_option("-o,--output", out_path, "write to file instead of stdout");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in regression suite");
    selftest->add_option("--max-dim", max_dim, "catalog dimension budget (default 6)");
    selftest->add_option("--seed", seed, "seed for randomized populations");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path, out);
        if (analyze->parsed()) return cmd_analyze(path, out);
        if (multiplier->parsed()) return cmd_multiplier(path, out);
        if (pair->parsed()) return cmd_pair(path, complement_csv, out);
        if (catalog->parsed()) return cmd_catalog(family, m, n, out_path, out);
        if (selftest->parsed()) return cmd_selftest(max_dim, seed, out);
    } catch (const UnsupportedPairError& err) {
        std::cerr << "unsupported pair: " << err.what() << "\n";
        return kExitUnsupportedPair;
    } catch (const ParseError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
