#include "gyro/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gyro/builtins.hpp"
#include "gyro/cayley_graph.hpp"
#include "gyro/graph_analysis.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/table_io.hpp"
#include "gyro/theorems.hpp"

namespace gyro {

namespace {

constexpr std::string_view kBuiltinPrefix = "builtin:";

// Thrown when a source fails axiom validation; mapped to exit code 1.
struct VerifyFailure {
    VerificationReport report;
};

std::string set_str(const std::vector<int>& set) {
    std::string s = "{";
    for (size_t i = 0; i < set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(set[i]);
    }
    return s + "}";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::vector<int> parse_elem_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int value;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw GyroError("bad element list '" + text + "': '" + item + "' is not an integer");
        }
        if (used != item.size())
            throw GyroError("bad element list '" + text + "': '" + item + "' is not an integer");
        out.push_back(value);
    }
    if (out.empty()) throw GyroError("element list '" + text + "' is empty");
    return out;
}

ParsedTables load_tables(const std::string& src) {
    if (src.starts_with(kBuiltinPrefix))
        return parse_table_file(builtin_source(src.substr(kBuiltinPrefix.size())));
    std::ifstream in(src, std::ios::binary);
    if (!in) throw GyroError("cannot open '" + src + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table_file(ss.str());
}

Gyrogroup load_group(const std::string& src) {
    if (src.starts_with(kBuiltinPrefix)) return builtin(src.substr(kBuiltinPrefix.size()));
    auto tables = load_tables(src);
    auto result = verify_axioms(tables.addition, tables.gyrations, src);
    if (!result.group) throw VerifyFailure{std::move(result.report)};
    return std::move(*result.group);
}

void print_violations(std::ostream& os, const VerificationReport& report) {
    for (const auto& v : report.violations)
        os << "violation " << axiom_name(v.axiom) << " " << set_str(v.witness) << ": " << v.detail
           << "\n";
}

int element_order(const Gyrogroup& g, int a) {
    int k = 1, x = a;
    while (x != g.identity()) {
        x = g.op(a, x);
        ++k;
    }
    return k;
}

// ---- subcommand option bags -------------------------------------------

struct SrcOpts {
    std::string src;
};

struct SubgyroOpts : SrcOpts {
    bool l_only = false;
    std::string set;
    std::string closure;
    int bound = 16;
};

struct GraphOpts : SrcOpts {
    std::string side;
    std::string set;
    std::string format = "dot";
    std::string out_path;
    bool labels = false;
};

struct TheoremOpts : SrcOpts {
    std::string set;
};

struct SearchOpts : SrcOpts {
    int max_set_size = 2;
    bool symmetric_only = false;
};

// ---- subcommand handlers ----------------------------------------------

int cmd_verify(const SrcOpts& opt, std::ostream& out) {
    auto tables = load_tables(opt.src);
    auto result = verify_axioms(tables.addition, tables.gyrations, opt.src);
    out << "source: " << opt.src << "\n";
    out << "order: " << tables.addition.order() << "\n";
    if (result.report.passed()) {
        out << "axioms: PASS\n";
        return 0;
    }
    out << "axioms: FAIL\n";
    print_violations(out, result.report);
    return 1;
}

int cmd_info(const SrcOpts& opt, std::ostream& out) {
    const Gyrogroup g = load_group(opt.src);
    out << "source: " << opt.src << "\n";
    out << "order: " << g.order() << "\n";
    out << "identity: " << g.identity() << "\n";
    out << "inverses:";
    for (int a = 0; a < g.order(); ++a) out << " " << g.neg(a);
    out << "\n";
    out << "element orders:";
    for (int a = 0; a < g.order(); ++a) out << " " << element_order(g, a);
    out << "\n";
    const auto& pool = g.gyrations().pool();
    out << "distinct gyrations: " << pool.size() << "\n";
    for (size_t id = 1; id < pool.size(); ++id)
        out << "  " << format_cycles(pool[id]) << "\n";
    return 0;
}

int cmd_subgyro(const SubgyroOpts& opt, std::ostream& out) {
    const Gyrogroup g = load_group(opt.src);
    if (!opt.closure.empty() || !opt.set.empty()) {
        if (opt.closure.empty() || opt.set.empty())
            throw GyroError("--set and --closure must be given together");
        const auto seeds = parse_elem_list(opt.set);
        const auto closed =
            opt.closure == "left" ? left_closure(g, seeds) : right_closure(g, seeds);
        out << opt.closure << " closure of " << set_str(normalize_set(g, seeds)) << ": "
            << set_str(closed) << "\n";
        if (!closed.empty()) {
            const auto sub = is_subgyrogroup(g, closed);
            out << "subgyrogroup: " << yesno(sub.ok) << "\n";
            out << "l-subgyrogroup: " << yesno(sub.ok && is_l_subgyrogroup(g, closed).ok) << "\n";
        }
        return 0;
    }
    const auto subs = all_subgyrogroups(g, opt.l_only, opt.bound);
    out << "subgyrogroups: " << subs.size() << "\n";
    for (const auto& sub : subs)
        out << set_str(sub.carrier) << " " << (sub.is_l ? "L" : "-") << "\n";
    return 0;
}

DiGraph build_side(const Gyrogroup& g, const std::string& side, const std::vector<int>& set) {
    return side == "L" ? build_lcay(g, set) : build_rcay(g, set);
}

int cmd_cayley(const GraphOpts& opt, std::ostream& out) {
    const Gyrogroup g = load_group(opt.src);
    const auto set = parse_elem_list(opt.set);
    const DiGraph graph = build_side(g, opt.side, set);
    ExportOptions eopts;
    eopts.generator_labels = opt.labels;
    eopts.graph_name = (opt.side == "L" ? "lcay" : "rcay");
    const std::string text =
        export_graph(graph, opt.format == "dot" ? GraphFormat::dot : GraphFormat::json, eopts);
    if (opt.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) throw GyroError("cannot write '" + opt.out_path + "'");
        file << text;
    }
    return 0;
}

int cmd_analyze(const GraphOpts& opt, std::ostream& out) {
    const Gyrogroup g = load_group(opt.src);
    const auto set = normalize_set(g, parse_elem_list(opt.set), /*forbid_identity=*/true);
    const DiGraph graph = build_side(g, opt.side, set);

    out << "graph: " << (opt.side == "L" ? "LCay" : "RCay") << "(" << opt.src << ", "
        << set_str(set) << ")\n";
    out << "arcs: " << graph.arc_count() << "\n";
    out << "symmetric-set: " << yesno(is_symmetric_set(g, set)) << "\n";

    const auto undirected = is_undirected(graph);
    out << "undirected: " << yesno(undirected.undirected);
    if (!undirected)
        out << " (one-way arc " << undirected.one_way_arc->first << "->"
            << undirected.one_way_arc->second << ")";
    out << "\n";

    const auto components = connected_components(graph);
    out << "connected: " << yesno(components.size() == 1) << "\n";
    out << "components (" << components.size() << "):";
    for (const auto& block : components) out << " " << set_str(block);
    out << "\n";

    const auto transitive = is_vertex_transitive(graph);
    out << "vertex-transitive: " << yesno(transitive.transitive);
    if (!transitive)
        out << " (no automorphism " << transitive.witness->first << "->"
            << transitive.witness->second << ")";
    out << "\n";
    out << "perfect-matching: " << yesno(is_perfect_matching(graph)) << "\n";
    out << "cycle: " << yesno(is_cycle(graph)) << "\n";

    const auto closure = right_closure(g, set);
    for (GyrCondition mode :
         {GyrCondition::identity_on_g_s, GyrCondition::setwise_g_s, GyrCondition::setwise_g_g,
          GyrCondition::setwise_g_h, GyrCondition::point_in_s}) {
        const auto check = check_gyr_condition(g, set, mode, closure);
        out << "gyr " << gyr_condition_name(mode);
        if (mode == GyrCondition::setwise_g_h) out << " (H = right closure " << set_str(closure) << ")";
        out << ": " << yesno(check.holds);
        if (!check) out << " (witness " << set_str(check.witness) << ")";
        out << "\n";
    }
    return 0;
}

int cmd_theorems(const TheoremOpts& opt, std::ostream& out) {
    const Gyrogroup g = load_group(opt.src);
    const auto set = parse_elem_list(opt.set);
    const auto reports = check_all(g, set);
    bool any_violation = false;
    out << "set: " << set_str(normalize_set(g, set)) << "\n";
    for (const auto& r : reports) {
        out << theorem_name(r.id) << ": ";
        if (!r.applicable) {
            out << "not applicable (hypothesis=" << yesno(r.hypothesis)
                << " conclusion=" << yesno(r.conclusion) << ")\n";
            continue;
        }
        out << "hypothesis=" << yesno(r.hypothesis) << " conclusion=" << yesno(r.conclusion)
            << " consistent=" << yesno(r.consistent);
        if (!r.witness.empty()) out << " [" << r.witness << "]";
        out << "\n";
        any_violation = any_violation || !r.consistent;
    }
    if (any_violation) {
        out << "THEOREM VIOLATION FOUND\n";
        return 1;
    }
    return 0;
}

int cmd_search(const SearchOpts& opt, std::ostream& out) {
    const Gyrogroup g = load_group(opt.src);
    SearchConfig cfg;
    cfg.max_set_size = opt.max_set_size;
    cfg.symmetric_only = opt.symmetric_only;
    const auto result = search_counterexamples(g, cfg);
    out << "sets checked: " << result.sets_checked << " (max size " << cfg.max_set_size
        << (cfg.symmetric_only ? ", symmetric only" : "") << ")\n";
    out << "violations: " << result.violations.size() << "\n";
    for (const auto& f : result.violations)
        out << "  " << set_str(f.set) << " " << theorem_name(f.report.id) << "\n";
    out << "converse failures: " << result.converse_failures.size() << "\n";
    for (const auto& f : result.converse_failures)
        out << "  " << set_str(f.set) << " " << theorem_name(f.report.id) << "\n";
    return result.violations.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite gyrogroups, their Cayley graphs, and structure-theorem checks"};
    app.name("gyrocayley");
    app.require_subcommand(1);

    const std::string src_help = "table file path or builtin:g8|g15|g16";

    SrcOpts verify_opt;
    auto* verify = app.add_subcommand("verify", "validate the gyrogroup axioms of a table source");
    verify->add_option("src", verify_opt.src, src_help)->required();

    SrcOpts info_opt;
    auto* info = app.add_subcommand("info", "order, identity, inverses, element orders, gyrations");
    info->add_option("src", info_opt.src, src_help)->required();

    SubgyroOpts subgyro_opt;
    auto* subgyro = app.add_subcommand("subgyro", "enumerate subgyrogroups or close a subset");
    subgyro->add_option("src", subgyro_opt.src, src_help)->required();
    subgyro->add_flag("--l-only", subgyro_opt.l_only, "list only L-subgyrogroups");
    subgyro->add_option("--set", subgyro_opt.set, "comma-separated elements to close");
    subgyro->add_option("--closure", subgyro_opt.closure, "closure side")
        ->check(CLI::IsMember({"left", "right"}));
    subgyro->add_option("--bound", subgyro_opt.bound,
                        "max order for the exhaustive 2^n enumeration (default 16)");

    GraphOpts cayley_opt;
    auto* cayley = app.add_subcommand("cayley", "build a Cayley graph and export it");
    cayley->add_option("src", cayley_opt.src, src_help)->required();
    cayley->add_option("--side", cayley_opt.side, "L or R")
        ->required()
        ->check(CLI::IsMember({"L", "R"}));
    cayley->add_option("--set", cayley_opt.set, "comma-separated generating set")->required();
    cayley->add_option("--format", cayley_opt.format, "dot or json (default dot)")
        ->check(CLI::IsMember({"dot", "json"}));
    cayley->add_option("--out", cayley_opt.out_path, "write to file instead of stdout");
    cayley->add_flag("--labels", cayley_opt.labels, "annotate edges with their generators");

    GraphOpts analyze_opt;
    auto* analyze = app.add_subcommand(
        "analyze", "undirectedness, components, transitivity and gyration conditions");
    analyze->add_option("src", analyze_opt.src, src_help)->required();
    analyze->add_option("--side", analyze_opt.side, "L or R")
        ->required()
        ->check(CLI::IsMember({"L", "R"}));
    analyze->add_option("--set", analyze_opt.set, "comma-separated generating set")->required();

    TheoremOpts theorems_opt;
    auto* theorems = app.add_subcommand("theorems", "run every theorem check on (G, S)");
    theorems->add_option("src", theorems_opt.src, src_help)->required();
    theorems->add_option("--set", theorems_opt.set, "comma-separated generating set")->required();

    SearchOpts search_opt;
    auto* search = app.add_subcommand("search", "sweep generating sets for theorem findings");
    search->add_option("src", search_opt.src, src_help)->required();
    search->add_option("--max-set-size", search_opt.max_set_size, "largest |S| to try (default 2)");
    search->add_flag("--symmetric-only", search_opt.symmetric_only,
                     "only consider symmetric sets");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_opt, out);
        if (info->parsed()) return cmd_info(info_opt, out);
        if (subgyro->parsed()) return cmd_subgyro(subgyro_opt, out);
        if (cayley->parsed()) return cmd_cayley(cayley_opt, out);
        if (analyze->parsed()) return cmd_analyze(analyze_opt, out);
        if (theorems->parsed()) return cmd_theorems(theorems_opt, out);
        if (search->parsed()) return cmd_search(search_opt, out);
    } catch (const VerifyFailure& f) {
        err << "verification failed:\n";
        print_violations(err, f.report);
        return 1;
    } catch (const GyroError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;  // unreachable: require_subcommand guarantees a match
}

}  // namespace gyro
