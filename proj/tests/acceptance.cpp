// End-to-end acceptance suite: one line per criterion, exit 0 iff all
// pass. Everything here is exact integer equality; there are no
// tolerances anywhere in this library.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "gyro/builtins.hpp"
#include "gyro/cayley_graph.hpp"
#include "gyro/graph_analysis.hpp"
#include "gyro/subgyro.hpp"
#include "gyro/table_io.hpp"
#include "gyro/theorems.hpp"

using namespace gyro;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void criterion(int number, const std::string& label, bool ok) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", number, label.c_str());
    if (!ok) {
        ++g_failures;
        for (size_t i = 0; i < g_notes.size() && i < 5; ++i)
            std::printf("      %s\n", g_notes[i].c_str());
        if (g_notes.size() > 5)
            std::printf("      ... and %zu more\n", g_notes.size() - 5);
    }
    g_notes.clear();
}

bool note(bool ok, const std::string& what) {
    if (!ok) g_notes.push_back(what);
    return ok;
}

std::vector<std::vector<int>> table_rows(const CayleyTable& t) {
    std::vector<std::vector<int>> rows(t.order(), std::vector<int>(t.order()));
    for (int a = 0; a < t.order(); ++a)
        for (int b = 0; b < t.order(); ++b) rows[a][b] = t(a, b);
    return rows;
}

// all subsets of the non-identity elements with 1 <= |S| <= max_size,
// by size then lexicographically
std::vector<std::vector<int>> subsets(const Gyrogroup& g, int max_size) {
    std::vector<int> pool;
    for (int x = 0; x < g.order(); ++x)
        if (x != g.identity()) pool.push_back(x);
    const int m = static_cast<int>(pool.size());
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= max_size; ++k) {
        std::vector<int> index(k);
        for (int i = 0; i < k; ++i) index[i] = i;
        while (true) {
            std::vector<int> set(k);
            for (int i = 0; i < k; ++i) set[i] = pool[index[i]];
            out.push_back(std::move(set));
            int pos = k - 1;
            while (pos >= 0 && index[pos] == m - k + pos) --pos;
            if (pos < 0) break;
            ++index[pos];
            for (int i = pos + 1; i < k; ++i) index[i] = index[i - 1] + 1;
        }
    }
    return out;
}

// ---- criteria -----------------------------------------------------------

bool axiom_suite() {
    bool ok = true;
    for (const auto& name : builtin_names()) {
        const Gyrogroup& g = builtin(name);
        ok &= note(verify_axioms(g.table(), g.gyrations(), name).report.passed(),
                   name + " fails validation");
    }
    // every single-entry mutation of the g15 addition table must fail
    // with a located witness
    const auto base = table_rows(builtin("g15").table());
    for (int i = 0; i < 15 && ok; ++i)
        for (int j = 0; j < 15 && ok; ++j)
            for (int v = 0; v < 15 && ok; ++v) {
                if (v == base[i][j]) continue;
                auto rows = base;
                rows[i][j] = v;
                const auto result = verify_axioms(CayleyTable(rows));
                ok &= note(!result.report.passed() && !result.group.has_value() &&
                               !result.report.violations.empty() &&
                               !result.report.violations.front().witness.empty(),
                           "mutation at (" + std::to_string(i) + "," + std::to_string(j) +
                               ") not caught");
            }
    return ok;
}

bool gyration_derivation() {
    bool ok = true;
    const struct {
        const char* name;
        std::vector<const char*> cycles;
    } expected[] = {
        {"g8", {"(1 6)(2 5)"}},
        {"g15",
         {"(1 7 5 10 6)(2 3 8 11 14)", "(1 6 10 5 7)(2 14 11 8 3)", "(1 10 7 6 5)(2 11 3 14 8)",
          "(1 5 6 7 10)(2 8 14 3 11)"}},
        {"g16", {"(8 9)(10 11)(12 13)(14 15)"}},
    };
    for (const auto& [name, cycles] : expected) {
        const Gyrogroup& g = builtin(name);
        const auto derived = derive_gyrations(g.table());
        ok &= note(derived == g.gyrations(), std::string(name) + " derived table differs");
        ok &= note(derived.pool().size() == cycles.size() + 1,
                   std::string(name) + " wrong number of distinct gyrations");
        for (size_t i = 0; i < cycles.size(); ++i)
            ok &= note(derived.pool()[i + 1] == parse_cycles(cycles[i], g.order()),
                       std::string(name) + " nonidentity gyration " + std::to_string(i + 1) +
                           " differs");
    }
    return ok;
}

bool identity_suite() {
    bool ok = true;
    for (const auto& name : builtin_names())
        ok &= note(check_identities(builtin(name)).passed(), name + " identity violations");
    return ok;
}

bool g8_figures() {
    const DiGraph cycle = build_lcay(builtin("g8"), {1, 3});
    bool ok = note(is_undirected(cycle).undirected, "LCay(g8,{1,3}) not undirected");
    ok &= note(connected_components(cycle).size() == 1, "LCay(g8,{1,3}) not connected");
    ok &= note(is_cycle(cycle), "LCay(g8,{1,3}) not a cycle");
    ok &= note(is_vertex_transitive(cycle).transitive, "LCay(g8,{1,3}) not transitive");

    const DiGraph triple = build_lcay(builtin("g8"), {1, 2, 3});
    ok &= note(is_undirected(triple).undirected, "LCay(g8,{1,2,3}) not undirected");
    ok &= note(!is_vertex_transitive(triple).transitive, "LCay(g8,{1,2,3}) transitive");
    return ok;
}

bool g16_complete_graphs() {
    const DiGraph g = build_lcay(builtin("g16"), {1, 2, 3});
    const auto components = connected_components(g);
    bool ok = note(components.size() == 4, "wrong component count");
    for (const auto& block : components) {
        ok &= note(block.size() == 4, "component of wrong size");
        for (int u : block)
            for (int v : block)
                if (u != v) ok &= note(g.has_arc(u, v), "component not complete");
    }
    ok &= note(is_vertex_transitive(g).transitive, "not vertex-transitive");
    ok &= note(find_automorphism(g, 1, 7).has_value(), "no automorphism 1 -> 7");
    return ok;
}

bool g16_directed_figures() {
    const auto single = is_undirected(build_rcay(builtin("g16"), {8}));
    bool ok = note(!single.undirected && single.one_way_arc.has_value(),
                   "RCay(g16,{8}) lacks a one-way witness");
    const auto pair = is_undirected(build_rcay(builtin("g16"), {1, 8}));
    ok &= note(!pair.undirected && pair.one_way_arc.has_value(),
               "RCay(g16,{1,8}) lacks a one-way witness");
    return ok;
}

bool g16_components_cosets() {
    const Gyrogroup& g16 = builtin("g16");
    const DiGraph graph = build_rcay(g16, {8, 9});
    bool ok = note(is_undirected(graph).undirected, "RCay(g16,{8,9}) not undirected");

    const auto closure = right_closure(g16, {8, 9});
    ok &= note(closure == std::vector<int>{0, 1, 8, 9}, "right closure differs");
    ok &= note(is_l_subgyrogroup(g16, closure).ok, "closure not an L-subgyrogroup");

    const auto cosets = left_cosets(g16, closure);
    const std::vector<std::vector<int>> expect{
        {0, 1, 8, 9}, {2, 3, 10, 11}, {4, 5, 14, 15}, {6, 7, 12, 13}};
    ok &= note(cosets.blocks == expect, "coset blocks differ");
    ok &= note(connected_components(graph) == expect, "components differ from cosets");
    ok &= note(components_equal_partition(graph, cosets), "partition comparison fails");

    const auto lagrange = verify_lagrange(g16, closure);
    ok &= note(lagrange.holds && lagrange.index == 4 && 4 * 4 == g16.order(),
               "Lagrange counting fails");
    return ok;
}

bool g16_two_components() {
    const Gyrogroup& g16 = builtin("g16");
    const DiGraph graph = build_rcay(g16, {8, 9, 10, 11});
    bool ok = note(is_undirected(graph).undirected, "not undirected");
    ok &= note(is_vertex_transitive(graph).transitive, "not vertex-transitive");

    const std::vector<int> carrier{0, 1, 2, 3, 8, 9, 10, 11};
    const auto cosets = left_cosets(g16, carrier);
    ok &= note(cosets.blocks.size() == 2, "expected two cosets");
    ok &= note(components_equal_partition(graph, cosets), "components differ from cosets");

    const auto phi = find_automorphism(graph, 15, 0);
    ok &= note(phi.has_value() && (*phi)(15) == 0, "no automorphism 15 -> 0");

    // left addition by 15 is the published witness: 5->8, 15->0, 4->9
    std::vector<int> images(16);
    for (int x = 0; x < 16; ++x) images[x] = g16.add(15, x);
    const Permutation left_add_15{images};
    ok &= note(left_add_15(5) == 8 && left_add_15(15) == 0 && left_add_15(4) == 9,
               "left addition by 15 maps differently");
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v)
            ok &= note(graph.has_arc(u, v) == graph.has_arc(left_add_15(u), left_add_15(v)),
                       "left addition by 15 is not an automorphism");
    return ok;
}

bool g8_biconditionals() {
    const Gyrogroup& g8 = builtin("g8");
    bool ok = true;
    for (const auto& set : subsets(g8, 3)) {
        const auto lu = check_theorem(g8, set, TheoremId::l_undirected);
        ok &= note(lu.hypothesis == lu.conclusion, "L_UNDIRECTED biconditional fails");
        if (is_symmetric_set(g8, set)) {
            const auto lc = check_theorem(g8, set, TheoremId::l_connected);
            ok &= note(lc.hypothesis == lc.conclusion, "L_CONNECTED biconditional fails");
        }
    }
    return ok;
}

bool order2_matchings() {
    bool ok = true;
    int found = 0;
    for (const auto& name : builtin_names()) {
        const Gyrogroup& g = builtin(name);
        for (int s = 0; s < g.order(); ++s) {
            if (s == g.identity() || g.neg(s) != s) continue;
            ++found;
            const DiGraph graph = build_lcay(g, {s});
            ok &= note(is_perfect_matching(graph), name + " {" + std::to_string(s) +
                                                       "} not a perfect matching");
            ok &= note(graph.arc_count() == g.order(),
                       name + " matching has wrong edge count");  // |G|/2 edges, 2 arcs each
            ok &= note(is_vertex_transitive(graph).transitive,
                       name + " matching not transitive");
        }
    }
    ok &= note(found == 16, "expected 7 + 0 + 9 self-inverse non-identity elements");
    return ok;
}

bool theorem_sweeps() {
    SearchConfig cfg8;
    cfg8.max_set_size = 3;
    const auto g8 = search_counterexamples(builtin("g8"), cfg8);
    bool ok = note(g8.violations.empty(), "g8 sweep found violations");
    ok &= note(std::any_of(g8.converse_failures.begin(), g8.converse_failures.end(),
                           [](const SearchFinding& f) {
                               return f.set == std::vector<int>{1, 3} &&
                                      f.report.id == TheoremId::l_transitive;
                           }),
               "({1,3}, L_TRANSITIVE) not reported on g8");

    for (const char* name : {"g15", "g16"}) {
        SearchConfig cfg;
        cfg.max_set_size = 3;
        cfg.symmetric_only = true;
        ok &= note(search_counterexamples(builtin(name), cfg).violations.empty(),
                   std::string(name) + " sweep found violations");
    }
    return ok;
}

bool r_undirected_converse() {
    bool ok = true;
    const auto scan = [&](const Gyrogroup& g, bool symmetric_only) {
        for (const auto& set : subsets(g, 3)) {
            if (symmetric_only && !is_symmetric_set(g, set)) continue;
            if (!is_undirected(build_rcay(g, set)).undirected) continue;
            ok &= note(check_gyr_condition(g, set, GyrCondition::point_in_s).holds,
                       g.name() + " " + std::to_string(set[0]) + "...: gyr[g,s](s) escapes S");
        }
    };
    scan(builtin("g8"), false);
    scan(builtin("g15"), true);
    scan(builtin("g16"), true);
    return ok;
}

bool subgyrogroup_enumeration() {
    const auto subs = all_subgyrogroups(builtin("g16"));
    const auto find = [&](const std::vector<int>& carrier) {
        return std::find_if(subs.begin(), subs.end(),
                            [&](const Subgyrogroup& s) { return s.carrier == carrier; });
    };
    const auto small = find({0, 1, 8, 9});
    bool ok = note(small != subs.end() && small->is_l, "{0,1,8,9} missing or not L");
    const auto pair = find({0, 8});
    ok &= note(pair != subs.end() && !pair->is_l, "{0,8} missing or L");
    for (const auto& sub : subs)
        if (sub.is_l)
            ok &= note(16 % sub.carrier.size() == 0, "L carrier size does not divide 16");
    return ok;
}

}  // namespace

int main() {
    criterion(1, "axiom suite passes builtins, rejects every g15 single-entry mutation",
              axiom_suite());
    criterion(2, "gyration derivation reproduces the stored tables and published cycles",
              gyration_derivation());
    criterion(3, "all six gyrogroup identities hold on every builtin", identity_suite());
    criterion(4, "LCay(g8,{1,3}) is a transitive cycle; LCay(g8,{1,2,3}) is not transitive",
              g8_figures());
    criterion(5, "LCay(g16,{1,2,3}) is four complete graphs and vertex-transitive",
              g16_complete_graphs());
    criterion(6, "RCay(g16,{8}) and RCay(g16,{1,8}) are directed with witnesses",
              g16_directed_figures());
    criterion(7, "RCay(g16,{8,9}): components equal the four cosets of {0,1,8,9}",
              g16_components_cosets());
    criterion(8, "RCay(g16,{8,9,10,11}): two components, transitive, maps 15 to 0",
              g16_two_components());
    criterion(9, "both biconditionals hold over all g8 subsets of size <= 3",
              g8_biconditionals());
    criterion(10, "every self-inverse generator yields a transitive perfect matching",
              order2_matchings());
    criterion(11, "sweeps report zero violations and the published converse failure",
              theorem_sweeps());
    criterion(12, "undirected R-graphs always satisfy gyr[g,s](s) in S", r_undirected_converse());
    criterion(13, "g16 subgyrogroup enumeration flags {0,1,8,9} L and {0,8} non-L",
              subgyrogroup_enumeration());

    if (g_failures > 0) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
