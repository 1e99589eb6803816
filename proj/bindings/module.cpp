#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gyro/builtins.hpp"
#include "gyro/cayley_graph.hpp"
#include "gyro/graph_analysis.hpp"
#include "gyro/gyrogroup.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/table_io.hpp"
#include "gyro/theorems.hpp"

namespace py = pybind11;
using namespace gyro;

namespace {

std::vector<std::vector<int>> table_rows(const CayleyTable& t) {
    std::vector<std::vector<int>> rows(t.order(), std::vector<int>(t.order()));
    for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < t.order(); ++b) rows[a][b] = t(a, b);
    return rows;
}

GraphFormat format_from_string(const std::string& name) {
    if (name == "dot") return GraphFormat::dot;
    if (name == "json") return GraphFormat::json;
    throw GyroError("unknown graph format '" + name + "' (use 'dot' or 'json')");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite gyrogroups, their Cayley graphs, and structure-theorem checks";
    m.attr("__version__") = "0.1.0";

    py::register_exception<GyroError>(m, "GyroError", PyExc_ValueError);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<std::vector<int>>(), py::arg("images"))
        .def_static("identity", &Permutation::identity, py::arg("n"))
        .def_property_readonly("degree", &Permutation::degree)
        .def("__call__", [](const Permutation& p, int x) {
            if (x < 0 || x >= p.degree()) throw GyroError("point out of range");
            return p(x);
        })
        .def("images", &Permutation::images)
        .def("is_identity", &Permutation::is_identity)
        .def("inverse", &Permutation::inverse)
        .def("then", &Permutation::then, py::arg("next"))
        .def("cycles", [](const Permutation& p) { return format_cycles(p); })
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
        .def("__repr__",
             [](const Permutation& p) { return "Permutation(" + format_cycles(p) + ")"; });

    py::class_<CayleyTable>(m, "CayleyTable")
        .def(py::init<const std::vector<std::vector<int>>&>(), py::arg("rows"))
        .def_property_readonly("order", &CayleyTable::order)
        .def("entry", &CayleyTable::entry, py::arg("a"), py::arg("b"))
        .def("rows", &table_rows);

    py::class_<GyrationTable>(m, "GyrationTable")
        .def_property_readonly("order", &GyrationTable::order)
        .def("at", &GyrationTable::at, py::arg("a"), py::arg("b"))
        .def("pool", &GyrationTable::pool);

    py::enum_<Axiom>(m, "Axiom")
        .value("latin_row", Axiom::latin_row)
        .value("latin_col", Axiom::latin_col)
        .value("identity_element", Axiom::identity_element)
        .value("inverse_element", Axiom::inverse_element)
        .value("gyration_mismatch", Axiom::gyration_mismatch)
        .value("gyration_bijective", Axiom::gyration_bijective)
        .value("gyration_automorphism", Axiom::gyration_automorphism)
        .value("left_gyroassociative", Axiom::left_gyroassociative)
        .value("left_loop", Axiom::left_loop)
        .value("cancel_left_general", Axiom::cancel_left_general)
        .value("cancel_left", Axiom::cancel_left)
        .value("cancel_right_coadd", Axiom::cancel_right_coadd)
        .value("cancel_right_cosub", Axiom::cancel_right_cosub)
        .value("right_gyroassociative", Axiom::right_gyroassociative)
        .value("gyration_of_inverse", Axiom::gyration_of_inverse);

    py::class_<Violation>(m, "Violation")
        .def_readonly("axiom", &Violation::axiom)
        .def_readonly("witness", &Violation::witness)
        .def_readonly("detail", &Violation::detail)
        .def("__repr__", [](const Violation& v) {
            return "Violation(" + std::string(axiom_name(v.axiom)) + ": " + v.detail + ")";
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_property_readonly("passed", &VerificationReport::passed)
        .def_readonly("violations", &VerificationReport::violations);

    py::class_<Gyrogroup>(m, "Gyrogroup")
        .def_property_readonly("order", &Gyrogroup::order)
        .def_property_readonly("identity", &Gyrogroup::identity)
        .def_property_readonly("name", &Gyrogroup::name)
        .def("add", &Gyrogroup::add, py::arg("a"), py::arg("b"))
        .def("neg", &Gyrogroup::neg, py::arg("a"))
        .def("gyr", &Gyrogroup::gyr, py::arg("a"), py::arg("b"))
        .def("gyr_apply", &Gyrogroup::gyr_apply, py::arg("a"), py::arg("b"), py::arg("c"))
        .def("coadd", &Gyrogroup::coadd, py::arg("a"), py::arg("b"))
        .def("cosub", &Gyrogroup::cosub, py::arg("a"), py::arg("b"))
        .def("left_nested_product",
             [](const Gyrogroup& g, const std::vector<int>& seq) {
                 return g.left_nested_product(seq);
             },
             py::arg("seq"))
        .def("right_nested_product",
             [](const Gyrogroup& g, const std::vector<int>& seq) {
                 return g.right_nested_product(seq);
             },
             py::arg("seq"))
        .def("table", &Gyrogroup::table)
        .def("gyrations", &Gyrogroup::gyrations)
        .def("inverses", &Gyrogroup::inverses)
        .def("__repr__", [](const Gyrogroup& g) {
            std::ostringstream os;
            os << "Gyrogroup(";
            if (!g.name().empty()) os << g.name() << ", ";
            os << "order " << g.order() << ")";
            return os.str();
        });

    py::class_<ValidationResult>(m, "ValidationResult")
        .def_readonly("report", &ValidationResult::report)
        .def_readonly("group", &ValidationResult::group);

    m.def("verify_axioms", &verify_axioms, py::arg("table"),
          py::arg("gyrations") = std::nullopt, py::arg("name") = "");
    m.def("derive_gyrations", &derive_gyrations, py::arg("table"));
    m.def("check_identities", &check_identities, py::arg("group"));

    m.def("builtin", &builtin, py::arg("name"), py::return_value_policy::copy);
    m.def("builtin_names", &builtin_names);
    m.def("builtin_source", [](std::string_view name) { return std::string(builtin_source(name)); },
          py::arg("name"));

    // subgyrogroups
    py::class_<Subgyrogroup>(m, "Subgyrogroup")
        .def_readonly("carrier", &Subgyrogroup::carrier)
        .def_readonly("is_l", &Subgyrogroup::is_l);
    py::class_<SubgyroCheck>(m, "SubgyroCheck")
        .def_readonly("ok", &SubgyroCheck::ok)
        .def_readonly("reason", &SubgyroCheck::reason)
        .def_readonly("witness", &SubgyroCheck::witness)
        .def("__bool__", [](const SubgyroCheck& c) { return c.ok; });
    py::class_<CosetPartition>(m, "CosetPartition")
        .def_readonly("carrier", &CosetPartition::carrier)
        .def_readonly("blocks", &CosetPartition::blocks)
        .def_readonly("representatives", &CosetPartition::representatives);
    py::class_<LagrangeCheck>(m, "LagrangeCheck")
        .def_readonly("holds", &LagrangeCheck::holds)
        .def_readonly("index", &LagrangeCheck::index);

    m.def("left_closure", &left_closure, py::arg("group"), py::arg("seeds"));
    m.def("right_closure", &right_closure, py::arg("group"), py::arg("seeds"));
    m.def("is_subgyrogroup", &is_subgyrogroup, py::arg("group"), py::arg("carrier"));
    m.def("is_l_subgyrogroup", &is_l_subgyrogroup, py::arg("group"), py::arg("carrier"));
    m.def("left_cosets", &left_cosets, py::arg("group"), py::arg("carrier"));
    m.def("verify_lagrange", &verify_lagrange, py::arg("group"), py::arg("carrier"));
    m.def("all_subgyrogroups", &all_subgyrogroups, py::arg("group"), py::arg("l_only") = false,
          py::arg("order_bound") = 16);

    // Cayley graphs
    py::class_<DiGraph>(m, "DiGraph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("order", &DiGraph::order)
        .def_property_readonly("arc_count", &DiGraph::arc_count)
        .def("add_arc", &DiGraph::add_arc, py::arg("u"), py::arg("v"), py::arg("label") = -1)
        .def("has_arc", &DiGraph::has_arc, py::arg("u"), py::arg("v"))
        .def("out", &DiGraph::out, py::arg("u"))
        .def("arcs", &DiGraph::arcs)
        .def("arc_labels", &DiGraph::arc_labels, py::arg("u"), py::arg("v"))
        .def("in_degrees", &DiGraph::in_degrees);

    py::enum_<GyrCondition>(m, "GyrCondition")
        .value("identity_on_g_s", GyrCondition::identity_on_g_s)
        .value("setwise_g_s", GyrCondition::setwise_g_s)
        .value("setwise_g_g", GyrCondition::setwise_g_g)
        .value("setwise_g_h", GyrCondition::setwise_g_h)
        .value("point_in_s", GyrCondition::point_in_s);

    py::class_<ConditionCheck>(m, "ConditionCheck")
        .def_readonly("holds", &ConditionCheck::holds)
        .def_readonly("witness", &ConditionCheck::witness)
        .def("__bool__", [](const ConditionCheck& c) { return c.holds; });
    py::class_<UndirectedCheck>(m, "UndirectedCheck")
        .def_readonly("undirected", &UndirectedCheck::undirected)
        .def_readonly("one_way_arc", &UndirectedCheck::one_way_arc)
        .def("__bool__", [](const UndirectedCheck& c) { return c.undirected; });

    m.def("is_symmetric_set", &is_symmetric_set, py::arg("group"), py::arg("set"));
    m.def("build_lcay", &build_lcay, py::arg("group"), py::arg("set"));
    m.def("build_rcay", &build_rcay, py::arg("group"), py::arg("set"));
    m.def("is_undirected", &is_undirected, py::arg("graph"));
    m.def("connected_components", &connected_components, py::arg("graph"));
    m.def("check_gyr_condition", &check_gyr_condition, py::arg("group"), py::arg("set"),
          py::arg("mode"), py::arg("subgroup") = std::vector<int>{});

    // graph analysis
    py::class_<TransitivityCheck>(m, "TransitivityCheck")
        .def_readonly("transitive", &TransitivityCheck::transitive)
        .def_readonly("witness", &TransitivityCheck::witness)
        .def("__bool__", [](const TransitivityCheck& c) { return c.transitive; });

    m.def("find_automorphism", &find_automorphism, py::arg("graph"), py::arg("u"), py::arg("v"));
    m.def("is_vertex_transitive", &is_vertex_transitive, py::arg("graph"));
    m.def("is_perfect_matching", &is_perfect_matching, py::arg("graph"));
    m.def("is_cycle", &is_cycle, py::arg("graph"));
    m.def("components_equal_partition", &components_equal_partition, py::arg("graph"),
          py::arg("partition"));

    // theorems
    py::enum_<TheoremId>(m, "TheoremId")
        .value("L_UNDIRECTED", TheoremId::l_undirected)
        .value("L_CONNECTED", TheoremId::l_connected)
        .value("ORDER2_MATCHING", TheoremId::order2_matching)
        .value("L_TRANSITIVE", TheoremId::l_transitive)
        .value("R_UNDIRECTED_FWD", TheoremId::r_undirected_fwd)
        .value("R_UNDIRECTED_CONV", TheoremId::r_undirected_conv)
        .value("R_TRANSITIVE", TheoremId::r_transitive)
        .value("COMPONENTS_COSETS", TheoremId::components_cosets);

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_readonly("id", &TheoremReport::id)
        .def_readonly("applicable", &TheoremReport::applicable)
        .def_readonly("hypothesis", &TheoremReport::hypothesis)
        .def_readonly("conclusion", &TheoremReport::conclusion)
        .def_readonly("consistent", &TheoremReport::consistent)
        .def_readonly("witness", &TheoremReport::witness)
        .def("__repr__", [](const TheoremReport& r) {
            std::ostringstream os;
            os << "TheoremReport(" << theorem_name(r.id) << ", hypothesis=" << r.hypothesis
               << ", conclusion=" << r.conclusion << ", consistent=" << r.consistent << ")";
            return os.str();
        });

    py::class_<SearchConfig>(m, "SearchConfig")
        .def(py::init<>())
        .def_readwrite("max_set_size", &SearchConfig::max_set_size)
        .def_readwrite("symmetric_only", &SearchConfig::symmetric_only)
        .def_readwrite("theorems", &SearchConfig::theorems)
        .def_readwrite("pool", &SearchConfig::pool)
        .def_readwrite("candidate_guard", &SearchConfig::candidate_guard);

    py::class_<SearchFinding>(m, "SearchFinding")
        .def_readonly("set", &SearchFinding::set)
        .def_readonly("report", &SearchFinding::report);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("violations", &SearchResult::violations)
        .def_readonly("converse_failures", &SearchResult::converse_failures)
        .def_readonly("sets_checked", &SearchResult::sets_checked);

    m.def("theorem_name", [](TheoremId id) { return std::string(theorem_name(id)); },
          py::arg("id"));
    m.def("check_theorem", &check_theorem, py::arg("group"), py::arg("set"), py::arg("id"),
          py::arg("aux_subgroup") = std::nullopt);
    m.def("check_all", &check_all, py::arg("group"), py::arg("set"));
    m.def("search_counterexamples", &search_counterexamples, py::arg("group"), py::arg("config"));

    // table files and graph export
    py::class_<ParsedTables>(m, "ParsedTables")
        .def_readonly("addition", &ParsedTables::addition)
        .def_readonly("gyrations", &ParsedTables::gyrations);

    m.def("parse_table_file", &parse_table_file, py::arg("text"));
    m.def("serialize_table_file", &serialize_table_file, py::arg("group"));
    m.def("parse_cycles", &parse_cycles, py::arg("text"), py::arg("n"));
    m.def("format_cycles", &format_cycles, py::arg("permutation"));
    m.def(
        "export_graph",
        [](const DiGraph& g, const std::string& format, bool labels, const std::string& name) {
            ExportOptions opts;
            opts.generator_labels = labels;
            opts.graph_name = name;
            return export_graph(g, format_from_string(format), opts);
        },
        py::arg("graph"), py::arg("format") = "dot", py::arg("labels") = false,
        py::arg("name") = "cayley");
}
