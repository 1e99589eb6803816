#include "gyro/theorems.hpp"

#include <algorithm>

#include "gyro/cayley_graph.hpp"
#include "gyro/graph_analysis.hpp"
#include "gyro/subgyro.hpp"

namespace gyro {

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::l_undirected: return "L_UNDIRECTED";
        case TheoremId::l_connected: return "L_CONNECTED";
        case TheoremId::order2_matching: return "ORDER2_MATCHING";
        case TheoremId::l_transitive: return "L_TRANSITIVE";
        case TheoremId::r_undirected_fwd: return "R_UNDIRECTED_FWD";
        case TheoremId::r_undirected_conv: return "R_UNDIRECTED_CONV";
        case TheoremId::r_transitive: return "R_TRANSITIVE";
        case TheoremId::components_cosets: return "COMPONENTS_COSETS";
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view s) {
    for (TheoremId id : kAllTheorems)
        if (theorem_name(id) == s) return id;
    return std::nullopt;
}

bool theorem_is_biconditional(TheoremId id) {
    return id == TheoremId::l_undirected || id == TheoremId::l_connected;
}

namespace {

std::string arc_str(std::pair<int, int> arc) {
    return std::to_string(arc.first) + "->" + std::to_string(arc.second);
}

void finish(TheoremReport& r) {
    if (!r.applicable) {
        r.consistent = true;
    } else if (theorem_is_biconditional(r.id)) {
        r.consistent = r.hypothesis == r.conclusion;
    } else {
        r.consistent = !r.hypothesis || r.conclusion;
    }
}

}  // namespace

TheoremReport check_theorem(const Gyrogroup& g, const std::vector<int>& set, TheoremId id,
                            const std::optional<std::vector<int>>& aux_subgroup) {
    const auto s = normalize_set(g, set, /*forbid_identity=*/true);
    const bool symmetric = is_symmetric_set(g, s);

    TheoremReport r;
    r.id = id;

    switch (id) {
        case TheoremId::l_undirected: {
            const auto check = is_undirected(build_lcay(g, s));
            r.hypothesis = symmetric;
            r.conclusion = check.undirected;
            if (!check && symmetric) r.witness = "one-way arc " + arc_str(*check.one_way_arc);
            break;
        }
        case TheoremId::l_connected: {
            // stated for symmetric S only; generating products need at
            // least one factor, so the empty set is out of scope too
            r.applicable = symmetric && !s.empty();
            r.hypothesis = left_closure(g, s).size() == static_cast<size_t>(g.order());
            r.conclusion = connected_components(build_lcay(g, s)).size() == 1;
            break;
        }
        case TheoremId::order2_matching: {
            r.hypothesis = s.size() == 1 && g.neg(s.front()) == s.front();
            const auto lcay = build_lcay(g, s);
            r.conclusion = is_perfect_matching(lcay) && is_vertex_transitive(lcay).transitive;
            break;
        }
        case TheoremId::l_transitive: {
            r.hypothesis =
                symmetric && check_gyr_condition(g, s, GyrCondition::identity_on_g_s).holds;
            const auto check = is_vertex_transitive(build_lcay(g, s));
            r.conclusion = check.transitive;
            if (!check && r.hypothesis)
                r.witness = "no automorphism " + arc_str(*check.witness);
            break;
        }
        case TheoremId::r_undirected_fwd: {
            r.hypothesis = symmetric && check_gyr_condition(g, s, GyrCondition::setwise_g_s).holds;
            const auto check = is_undirected(build_rcay(g, s));
            r.conclusion = check.undirected;
            if (!check && r.hypothesis) r.witness = "one-way arc " + arc_str(*check.one_way_arc);
            break;
        }
        case TheoremId::r_undirected_conv: {
            r.hypothesis = symmetric && is_undirected(build_rcay(g, s)).undirected;
            const auto check = check_gyr_condition(g, s, GyrCondition::point_in_s);
            r.conclusion = check.holds;
            if (!check && r.hypothesis)
                r.witness = "gyr[" + std::to_string(check.witness[0]) + "," +
                            std::to_string(check.witness[1]) + "](" +
                            std::to_string(check.witness[1]) + ") = " +
                            std::to_string(check.witness[2]) + " escapes the set";
            break;
        }
        case TheoremId::r_transitive: {
            r.hypothesis = symmetric && check_gyr_condition(g, s, GyrCondition::setwise_g_g).holds;
            const auto check = is_vertex_transitive(build_rcay(g, s));
            r.conclusion = check.transitive;
            if (!check && r.hypothesis)
                r.witness = "no automorphism " + arc_str(*check.witness);
            break;
        }
        case TheoremId::components_cosets: {
            const auto closure = right_closure(g, s);
            bool aux_matches = true;
            if (aux_subgroup) aux_matches = normalize_set(g, *aux_subgroup) == closure;
            const bool is_l = !closure.empty() && is_l_subgyrogroup(g, closure).ok;
            const bool setwise =
                is_l && check_gyr_condition(g, s, GyrCondition::setwise_g_h, closure).holds;
            r.hypothesis = symmetric && aux_matches && is_l && setwise;
            r.conclusion =
                is_l && components_equal_partition(build_rcay(g, s), left_cosets(g, closure));
            break;
        }
    }
    finish(r);
    return r;
}

std::vector<TheoremReport> check_all(const Gyrogroup& g, const std::vector<int>& set) {
    std::vector<TheoremReport> reports;
    reports.reserve(std::size(kAllTheorems));
    for (TheoremId id : kAllTheorems) reports.push_back(check_theorem(g, set, id));
    return reports;
}

SearchResult search_counterexamples(const Gyrogroup& g, const SearchConfig& cfg) {
    if (cfg.max_set_size < 1) throw GyroError("max_set_size must be at least 1");

    std::vector<int> pool = cfg.pool ? normalize_set(g, *cfg.pool) : std::vector<int>{};
    if (!cfg.pool) {
        for (int x = 0; x < g.order(); ++x)
            if (x != g.identity()) pool.push_back(x);
    } else {
        std::erase(pool, g.identity());
    }

    const int m = static_cast<int>(pool.size());
    const int k_max = std::min(cfg.max_set_size, m);

    long double candidates = 0;
    for (int k = 1; k <= k_max; ++k) {
        long double c = 1;
        for (int i = 0; i < k; ++i) c = c * (m - i) / (i + 1);
        candidates += c;
        if (candidates > static_cast<long double>(cfg.candidate_guard)) break;
    }
    if (candidates > static_cast<long double>(cfg.candidate_guard))
        throw GyroError("candidate set count exceeds the guard of " +
                        std::to_string(cfg.candidate_guard) +
                        "; lower max_set_size or restrict the pool");

    const auto& ids = cfg.theorems.empty()
                          ? std::vector<TheoremId>(std::begin(kAllTheorems), std::end(kAllTheorems))
                          : cfg.theorems;

    SearchResult result;
    std::vector<int> index(k_max);
    for (int k = 1; k <= k_max; ++k) {
        // k-combinations of pool in lexicographic order
        for (int i = 0; i < k; ++i) index[i] = i;
        while (true) {
            std::vector<int> set(k);
            for (int i = 0; i < k; ++i) set[i] = pool[index[i]];

            if (!cfg.symmetric_only || is_symmetric_set(g, set)) {
                ++result.sets_checked;
                for (TheoremId id : ids) {
                    TheoremReport rep = check_theorem(g, set, id);
                    if (!rep.consistent)
                        result.violations.push_back({set, rep});
                    else if (rep.applicable && !theorem_is_biconditional(id) && !rep.hypothesis &&
                             rep.conclusion)
                        result.converse_failures.push_back({set, rep});
                }
            }

            int pos = k - 1;
            while (pos >= 0 && index[pos] == m - k + pos) --pos;
            if (pos < 0) break;
            ++index[pos];
            for (int i = pos + 1; i < k; ++i) index[i] = index[i - 1] + 1;
        }
    }
    return result;
}

}  // namespace gyro
