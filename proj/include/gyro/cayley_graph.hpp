#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gyro/gyrogroup.hpp"

namespace gyro {

// Directed graph on {0..n-1} with sorted adjacency lists and optional
// per-arc generator labels. Arcs produced by several generators are
// stored once with the label set merged.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int n) : n_(n), out_(n) {}

    int order() const { return n_; }
    int arc_count() const { return arcs_; }

    void add_arc(int u, int v, int label = -1);

    bool has_arc(int u, int v) const;
    const std::vector<int>& out(int u) const { return out_[u]; }
    std::vector<int> in_degrees() const;

    // All arcs in lexicographic order.
    std::vector<std::pair<int, int>> arcs() const;

    // Generators that produce arc (u,v); empty when unlabeled.
    std::vector<int> arc_labels(int u, int v) const;

private:
    int n_ = 0;
    int arcs_ = 0;
    std::vector<std::vector<int>> out_;
    std::map<std::pair<int, int>, std::vector<int>> labels_;
};

// Gyration side conditions appearing as theorem hypotheses.
enum class GyrCondition {
    identity_on_g_s,  // gyr[g,s] = id            for all g in G, s in S
    setwise_g_s,      // gyr[g,s](S) = S          for all g in G, s in S
    setwise_g_g,      // gyr[g,g'](S) = S         for all g, g' in G
    setwise_g_h,      // gyr[g,h](S) = S          for all g in G, h in H
    point_in_s,       // gyr[g,s](s) in S         for all g in G, s in S
};

std::string_view gyr_condition_name(GyrCondition c);

struct ConditionCheck {
    bool holds = true;
    // Least witness when violated: {a, b, x, image} for the setwise and
    // identity modes, {g, s, image} for point_in_s.
    std::vector<int> witness;
    explicit operator bool() const { return holds; }
};

struct UndirectedCheck {
    bool undirected = true;
    std::optional<std::pair<int, int>> one_way_arc;  // least arc lacking its reverse
    explicit operator bool() const { return undirected; }
};

// True iff -s is in S for every s in S. The identity must not be in S
// (domain error), matching the Cayley-graph convention below.
bool is_symmetric_set(const Gyrogroup& g, const std::vector<int>& set);

// Left Cayley graph: arc u -> v iff v = s+u for some s in S.
// Right Cayley graph: arc u -> v iff v = u+s for some s in S.
// S must not contain the identity (no self-loops); arcs carry the set of
// generators that produce them.
DiGraph build_lcay(const Gyrogroup& g, const std::vector<int>& set);
DiGraph build_rcay(const Gyrogroup& g, const std::vector<int>& set);

UndirectedCheck is_undirected(const DiGraph& g);

// Weakly connected components (arc direction ignored for reachability),
// blocks sorted by least vertex.
std::vector<std::vector<int>> connected_components(const DiGraph& g);

ConditionCheck check_gyr_condition(const Gyrogroup& g, const std::vector<int>& set,
                                   GyrCondition mode, const std::vector<int>& subgroup = {});

// Shared input hygiene for element-set arguments: sorts, deduplicates,
// and range-checks; optionally rejects the identity.
std::vector<int> normalize_set(const Gyrogroup& g, std::vector<int> set,
                               bool forbid_identity = false);

}  // namespace gyro
