#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superschur/action.hpp"
#include "superschur/bounds.hpp"
#include "superschur/catalog.hpp"
#include "superschur/homology.hpp"
#include "superschur/io.hpp"
#include "superschur/pairs.hpp"
#include "superschur/selftest.hpp"
#include "superschur/subspace.hpp"
#include "superschur/superalgebra.hpp"

#include <iostream>
#include <sstream>

namespace py = pybind11;
using namespace superschur;

namespace pybind11::detail {

// Rat <-> fractions.Fraction (ints and "p/q" strings accepted on input).
template <>
struct type_caster<Rat> {
    PYBIND11_TYPE_CASTER(Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (src.is_none()) return false;
        object fraction = module_::import("fractions").attr("Fraction");
        if (!PyLong_Check(src.ptr()) && !PyUnicode_Check(src.ptr()) &&
            !isinstance(src, fraction))
            return false;
        try {
            value = Rat::parse(str(src).cast<std::string>());
        } catch (const std::invalid_argument&) {
            return false;
        }
        return true;
    }

    static handle cast(const Rat& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(src.str()).release();
    }
};

}  // namespace pybind11::detail

namespace {

ActionTable make_action(
    const SuperAlgebra& l, const SuperAlgebra& m,
    const std::map<std::pair<std::string, std::string>, std::map<std::string, Rat>>& images) {
    ActionTable act = ActionTable::trivial(l, m);
    for (const auto& [pair, value] : images) {
        auto li = l.index_of(pair.first);
        if (!li) throw std::invalid_argument("unknown acting label '" + pair.first + "'");
        auto mi = m.index_of(pair.second);
        if (!mi) throw std::invalid_argument("unknown acted label '" + pair.second + "'");
        Vec v(m.dim());
        for (const auto& [label, c] : value) {
            auto ki = m.index_of(label);
            if (!ki) throw std::invalid_argument("unknown acted label '" + label + "'");
            v[*ki] = c;
        }
        act.table[*li][*mi] = std::move(v);
    }
    return act;
}

SuperAlgebra make_algebra(
    const std::vector<std::string>& even, const std::vector<std::string>& odd,
    const std::map<std::pair<std::string, std::string>, std::map<std::string, Rat>>& brackets) {
    SuperAlgebra::Builder builder(even, odd);
    SuperAlgebra probe = SuperAlgebra::Builder(even, odd).build();  // for label lookup
    const int d = probe.dim();
    for (const auto& [pair, value] : brackets) {
        auto li = probe.index_of(pair.first), ri = probe.index_of(pair.second);
        if (!li) throw std::invalid_argument("unknown basis label '" + pair.first + "'");
        if (!ri) throw std::invalid_argument("unknown basis label '" + pair.second + "'");
        Vec v(d);
        for (const auto& [label, c] : value) {
            auto ki = probe.index_of(label);
            if (!ki) throw std::invalid_argument("unknown basis label '" + label + "'");
            v[*ki] = c;
        }
        builder.set_bracket(*li, *ri, std::move(v));
    }
    return builder.build();
}

std::vector<std::string> report_strings(const ValidationReport& report) {
    std::vector<std::string> out;
    for (const Violation& v : report.violations) {
        std::string s = violation_kind_name(v.kind) + " at (";
        bool first = true;
        for (int idx : v.where) {
            if (idx < 0) break;
            if (!first) s += ",";
            s += std::to_string(idx + 1);
            first = false;
        }
        s += "): " + v.detail;
        out.push_back(std::move(s));
    }
    return out;
}

py::dict multiplier_dict(const MultiplierReport& rep) {
    py::dict d;
    d["dim"] = py::make_tuple(rep.dims.even, rep.dims.odd);
    d["dim_M"] = rep.dim_multiplier;
    d["lambda2_dim"] = rep.lambda2_dim;
    d["rank_d2"] = rep.rank_d2;
    d["rank_d3"] = rep.rank_d3;
    d["nayak_bound"] = rep.nayak_bound;
    d["t"] = rep.defect_t;
    return d;
}

py::dict pair_dict(const PairMultiplierReport& rep) {
    py::dict d;
    d["dim_N"] = py::make_tuple(rep.dim_n.even, rep.dim_n.odd);
    d["dim_quotient"] = py::make_tuple(rep.dim_quotient.even, rep.dim_quotient.odd);
    d["dim_M"] = rep.dim_multiplier_pair;
    d["dim_M_L"] = rep.dim_multiplier_l;
    d["dim_M_quotient"] = rep.dim_multiplier_quotient;
    d["dim_commutator_NL"] =
        py::make_tuple(rep.dim_commutator_nl.even, rep.dim_commutator_nl.odd);
    d["dim_center_NL"] = py::make_tuple(rep.dim_center_nl.even, rep.dim_center_nl.odd);
    d["bound_pair"] = rep.bound_pair;
    d["bound_pair_refined"] = rep.bound_pair_refined;
    d["t"] = rep.defect_t;
    d["complement_is_ideal"] = rep.complement_is_ideal;
    return d;
}

}  // namespace

PYBIND11_MODULE(_superschur, m) {
    m.doc() = "Exact Schur multipliers of Lie superalgebras and pairs";

    py::register_exception<UnsupportedPairError>(m, "UnsupportedPairError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<SuperAlgebra>(m, "SuperAlgebra")
        .def(py::init(&make_algebra), py::arg("even"), py::arg("odd"),
             py::arg("brackets") =
                 std::map<std::pair<std::string, std::string>, std::map<std::string, Rat>>{},
             "Build from basis labels and brackets {(left, right): {label: coeff}}; "
             "the table is completed by super antisymmetry.")
        .def_property_readonly(
            "dims", [](const SuperAlgebra& a) { return py::make_tuple(a.even_dim(), a.odd_dim()); })
        .def_property_readonly("names", [](const SuperAlgebra& a) { return a.names(); })
        .def("validate",
             [](const SuperAlgebra& a) { return report_strings(a.validate()); },
             "List of axiom violations; empty iff this is a Lie superalgebra.")
        .def("is_abelian", &SuperAlgebra::is_abelian)
        .def("bracket", &SuperAlgebra::bracket, py::arg("x"), py::arg("y"))
        .def("basis_bracket", &SuperAlgebra::basis_bracket, py::arg("i"), py::arg("j"))
        .def("__eq__", [](const SuperAlgebra& a, const SuperAlgebra& b) { return a == b; })
        .def("__repr__", [](const SuperAlgebra& a) {
            return "<SuperAlgebra dim " + a.dims().str() + ">";
        });

    py::class_<GradedSubspace>(m, "GradedSubspace")
        .def_property_readonly(
            "dim", [](const GradedSubspace& s) { return py::make_tuple(s.dim().even, s.dim().odd); })
        .def_property_readonly("basis", [](const GradedSubspace& s) { return s.basis(); })
        .def("contains_vector",
             [](const GradedSubspace& s, const Vec& v) { return s.contains(v); })
        .def("contains", [](const GradedSubspace& s, const GradedSubspace& o) {
            return s.contains(o);
        })
        .def("__eq__",
             [](const GradedSubspace& a, const GradedSubspace& b) { return a == b; })
        .def("__repr__", [](const GradedSubspace& s) {
            return "<GradedSubspace dim " + s.dim().str() + ">";
        });

    m.def("span",
          [](const SuperAlgebra& a, const std::vector<Vec>& vectors) {
              return GradedSubspace::span(a.dims(), vectors);
          },
          py::arg("algebra"), py::arg("vectors"));
    m.def("subspace_from_labels", &subspace_from_labels, py::arg("algebra"), py::arg("labels"));
    m.def("full_space",
          [](const SuperAlgebra& a) { return GradedSubspace::full(a.dims()); });

    m.def("center", &center);
    m.def("pair_center", &pair_center, py::arg("algebra"), py::arg("ideal"));
    m.def("centralizer", &centralizer, py::arg("algebra"), py::arg("x"));
    m.def("commutator_subspace", &commutator_subspace, py::arg("algebra"), py::arg("u"),
          py::arg("v"));
    m.def("lower_central_series", &lower_central_series);
    m.def("nilpotency_class",
          [](const SuperAlgebra& a) -> std::optional<int> { return nilpotency_class(a); },
          "Nilpotency class, or None when the algebra is not nilpotent.");
    m.def("is_subalgebra", &is_subalgebra);
    m.def("is_graded_ideal", &is_graded_ideal);
    m.def("quotient",
          [](const SuperAlgebra& a, const GradedSubspace& ideal) {
              QuotientResult q = quotient(a, ideal);
              std::vector<Vec> proj;
              for (int i = 0; i < q.projection.rows(); ++i) proj.push_back(q.projection.row(i));
              return py::make_tuple(q.algebra, proj, q.section_indices);
          },
          py::arg("algebra"), py::arg("ideal"),
          "Returns (quotient algebra, projection rows, section basis indices).");
    m.def("direct_sum", &direct_sum);

    m.def("multiplier",
          [](const SuperAlgebra& a) { return multiplier_dict(multiplier_dim(a)); },
          "dim M(L) with ranks, the Nayak bound and the defect t(L).");
    m.def("pair_multiplier",
          [](const SuperAlgebra& l, const GradedSubspace& n,
             std::optional<GradedSubspace> k) {
              return pair_dict(pair_multiplier(PairPresentation{l, n, std::move(k)}));
          },
          py::arg("algebra"), py::arg("ideal"), py::arg("complement") = std::nullopt,
          "dim M(N,L) via the complement decomposition, with bounds and defect.");
    m.def("find_complement", &find_complement, py::arg("algebra"), py::arg("ideal"));

    py::class_<ActionTable>(m, "ActionTable")
        .def(py::init(&make_action), py::arg("acting"), py::arg("acted"),
             py::arg("images") =
                 std::map<std::pair<std::string, std::string>, std::map<std::string, Rat>>{},
             "Action of L on M from {(l_label, m_label): {m_label: coeff}}; "
             "unlisted pairs act as zero.")
        .def("apply", &ActionTable::apply, py::arg("l"), py::arg("m"))
        .def("validate", [](const ActionTable& act) { return report_strings(validate_action(act)); })
        .def("__repr__", [](const ActionTable& act) {
            return "<ActionTable " + act.acting.dims().str() + " on " + act.acted.dims().str() +
                   ">";
        });
    m.def("adjoint_action",
          [](const SuperAlgebra& a, const GradedSubspace& ideal) {
              AdjointActionResult adj = adjoint_action_on_ideal(a, ideal);
              return py::make_tuple(adj.m, adj.act);
          },
          py::arg("algebra"), py::arg("ideal"),
          "The ideal as an algebra on its own basis, with the adjoint action on it.");
    m.def("semidirect", &semidirect, py::arg("m"), py::arg("l"), py::arg("action"),
          "M x| L for a valid action; M's block comes first in the basis.");
    m.def("semidirect_ideal",
          [](const SuperAlgebra& mm, const SuperAlgebra& l) { return semidirect_ideal_m(mm, l); },
          py::arg("m"), py::arg("l"), "M embedded in semidirect(m, l, action) as a subspace.");

    m.def("abelian", &abelian, py::arg("m"), py::arg("n"));
    m.def("heisenberg_lie", &heisenberg_lie, py::arg("m"));
    m.def("heisenberg_even", &heisenberg_even, py::arg("m"), py::arg("n"));
    m.def("heisenberg_odd", &heisenberg_odd, py::arg("n"));
    m.def("nonabelian_11",
          [](const std::string& kind) {
              if (kind == "solvable") return nonabelian_11(NonAbelian11::solvable);
              if (kind == "heisenberg") return nonabelian_11(NonAbelian11::heisenberg);
              throw std::invalid_argument("kind must be 'solvable' or 'heisenberg'");
          },
          py::arg("kind"));
    m.def("enumerate_catalog",
          [](int max_dim) {
              py::list out;
              for (const CatalogEntry& e : enumerate_catalog(max_dim))
                  out.append(py::make_tuple(e.id, e.algebra, e.expected_multiplier));
              return out;
          },
          py::arg("max_dim"));

    m.def("nayak_bound", &nayak_bound, py::arg("m"), py::arg("n"));
    m.def("defect_t", &defect_t);
    m.def("heisenberg_multiplier_formula",
          [](const std::string& kind, int m, int n) {
              if (kind == "even")
                  return heisenberg_multiplier_formula(HeisenbergKind::even_center, m, n);
              if (kind == "odd")
                  return heisenberg_multiplier_formula(HeisenbergKind::odd_center, m, n);
              throw std::invalid_argument("kind must be 'even' or 'odd'");
          },
          py::arg("kind"), py::arg("m"), py::arg("n"));

    m.def("to_json",
          [](const SuperAlgebra& a, const std::string& name) {
              return algebra_to_json(a, name).dump(2);
          },
          py::arg("algebra"), py::arg("name") = std::string());
    m.def("from_json",
          [](const std::string& text) {
              AlgebraFile f = parse_algebra_json(nlohmann::json::parse(text));
              return py::make_tuple(f.algebra, f.ideal, f.complement);
          },
          "Parse an algebra file; returns (algebra, ideal or None, complement or None).");

    m.def("selftest",
          [](int max_dim, std::uint64_t seed, bool verbose) {
              SelftestOptions options;
              options.max_dim = max_dim;
              options.seed = seed;
              std::ostringstream sink;
              SelftestReport rep = run_selftest(options, verbose ? &std::cout : &sink);
              return rep.all_passed();
          },
          py::arg("max_dim") = 6, py::arg("seed") = 0x5eedULL, py::arg("verbose") = true,
          "Run the full regression suite; True iff every criterion passes.");

#ifdef VERSION_INFO
#define SUPERSCHUR_STR(x) #x
#define SUPERSCHUR_XSTR(x) SUPERSCHUR_STR(x)
    m.attr("__version__") = SUPERSCHUR_XSTR(VERSION_INFO);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
