#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro {

// The structure theorems packaged as executable hypothesis/conclusion
// checks over a pair (G, S).
//
//   L_UNDIRECTED      LCay(G,S) undirected        <=> S symmetric
//   L_CONNECTED       LCay(G,S) connected         <=> S left-generates G
//                     (stated for symmetric S; otherwise not applicable)
//   ORDER2_MATCHING   S = {s}, s self-inverse      => LCay is a perfect
//                     matching of |G|/2 edges, hence transitive
//   L_TRANSITIVE      S symmetric, gyr[g,s] = id   => LCay transitive
//   R_UNDIRECTED_FWD  S symmetric, gyr[g,s](S)=S   => RCay undirected
//   R_UNDIRECTED_CONV S symmetric, RCay undirected => gyr[g,s](s) in S
//   R_TRANSITIVE      S symmetric, gyr[g,g'](S)=S  => RCay transitive
//   COMPONENTS_COSETS S symmetric, H := right-closure(S) an
//                     L-subgyrogroup, gyr[g,h](S)=S => components of
//                     RCay(G,S) are exactly the left cosets of H
enum class TheoremId {
    l_undirected,
    l_connected,
    order2_matching,
    l_transitive,
    r_undirected_fwd,
    r_undirected_conv,
    r_transitive,
    components_cosets,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::l_undirected,     TheoremId::l_connected,   TheoremId::order2_matching,
    TheoremId::l_transitive,     TheoremId::r_undirected_fwd,
    TheoremId::r_undirected_conv, TheoremId::r_transitive, TheoremId::components_cosets,
};

std::string_view theorem_name(TheoremId id);                    // "L_UNDIRECTED", ...
std::optional<TheoremId> theorem_from_name(std::string_view s);
bool theorem_is_biconditional(TheoremId id);  // L_UNDIRECTED and L_CONNECTED

struct TheoremReport {
    TheoremId id;
    bool applicable = true;  // false when the theorem does not cover (G,S)
    bool hypothesis = false;
    bool conclusion = false;
    bool consistent = true;
    std::string witness;  // evidence when inconsistent
};

// Evaluates hypothesis and conclusion independently and reports; never
// asserts. For COMPONENTS_COSETS, `aux_subgroup` (when given) is compared
// against the right-closure of S as an extra hypothesis bit; otherwise
// the right-closure itself is used.
TheoremReport check_theorem(const Gyrogroup& g, const std::vector<int>& set, TheoremId id,
                            const std::optional<std::vector<int>>& aux_subgroup = std::nullopt);

// All theorems in declaration order.
std::vector<TheoremReport> check_all(const Gyrogroup& g, const std::vector<int>& set);

struct SearchConfig {
    int max_set_size = 2;
    bool symmetric_only = false;
    std::vector<TheoremId> theorems;       // empty = all
    std::optional<std::vector<int>> pool;  // candidate elements; identity is dropped
    long long candidate_guard = 10'000'000;
};

struct SearchFinding {
    std::vector<int> set;
    TheoremReport report;
};

struct SearchResult {
    // Inconsistent reports. The theorems are proven, so anything here
    // means the implementation (or the input tables) is broken.
    std::vector<SearchFinding> violations;
    // Conclusion true with hypothesis false on a one-way theorem: an
    // expected mathematical finding, not an error.
    std::vector<SearchFinding> converse_failures;
    long long sets_checked = 0;
};

// Enumerates candidate sets by size then lexicographically; refuses
// workloads whose candidate count exceeds the guard.
SearchResult search_counterexamples(const Gyrogroup& g, const SearchConfig& cfg);

}  // namespace gyro
