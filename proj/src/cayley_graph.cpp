#include "gyro/cayley_graph.hpp"

#include <algorithm>
#include <deque>

namespace gyro {

// ---------------------------------------------------------------------------
// DiGraph

void DiGraph::add_arc(int u, int v, int label) {
    auto& adj = out_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v);
    if (it == adj.end() || *it != v) {
        adj.insert(it, v);
        ++arcs_;
    }
    if (label >= 0) {
        auto& set = labels_[{u, v}];
        auto lit = std::lower_bound(set.begin(), set.end(), label);
        if (lit == set.end() || *lit != label) set.insert(lit, label);
    }
}

bool DiGraph::has_arc(int u, int v) const {
    const auto& adj = out_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<int> DiGraph::in_degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& adj : out_)
        for (int v : adj) ++deg[v];
    return deg;
}

std::vector<std::pair<int, int>> DiGraph::arcs() const {
    std::vector<std::pair<int, int>> all;
    all.reserve(arcs_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) all.emplace_back(u, v);
    return all;
}

std::vector<int> DiGraph::arc_labels(int u, int v) const {
    auto it = labels_.find({u, v});
    return it == labels_.end() ? std::vector<int>{} : it->second;
}

// ---------------------------------------------------------------------------
// Construction and predicates

std::vector<int> normalize_set(const Gyrogroup& g, std::vector<int> set, bool forbid_identity) {
    for (int x : set) g.require_element(x);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (forbid_identity && std::binary_search(set.begin(), set.end(), g.identity()))
        throw GyroError("the identity element " + std::to_string(g.identity()) +
                        " is not allowed in a generating set");
    return set;
}

bool is_symmetric_set(const Gyrogroup& g, const std::vector<int>& set) {
    const auto s = normalize_set(g, set, /*forbid_identity=*/true);
    for (int x : s)
        if (!std::binary_search(s.begin(), s.end(), g.neg(x))) return false;
    return true;
}

DiGraph build_lcay(const Gyrogroup& g, const std::vector<int>& set) {
    const auto s = normalize_set(g, set, /*forbid_identity=*/true);
    DiGraph graph(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int gen : s) graph.add_arc(u, g.op(gen, u), gen);
    return graph;
}

DiGraph build_rcay(const Gyrogroup& g, const std::vector<int>& set) {
    const auto s = normalize_set(g, set, /*forbid_identity=*/true);
    DiGraph graph(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int gen : s) graph.add_arc(u, g.op(u, gen), gen);
    return graph;
}

UndirectedCheck is_undirected(const DiGraph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.out(u))
            if (!g.has_arc(v, u)) return {false, std::make_pair(u, v)};
    return {};
}

std::vector<std::vector<int>> connected_components(const DiGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> undirected(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.out(u)) {
            undirected[u].push_back(v);
            undirected[v].push_back(u);
        }

    std::vector<std::vector<int>> blocks;
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> block;
        std::deque<int> work{start};
        seen[start] = 1;
        while (!work.empty()) {
            const int x = work.front();
            work.pop_front();
            block.push_back(x);
            for (int y : undirected[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    work.push_back(y);
                }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::string_view gyr_condition_name(GyrCondition c) {
    switch (c) {
        case GyrCondition::identity_on_g_s: return "identity_on_g_s";
        case GyrCondition::setwise_g_s: return "setwise_g_s";
        case GyrCondition::setwise_g_g: return "setwise_g_g";
        case GyrCondition::setwise_g_h: return "setwise_g_h";
        case GyrCondition::point_in_s: return "point_in_s";
    }
    return "unknown";
}

ConditionCheck check_gyr_condition(const Gyrogroup& g, const std::vector<int>& set,
                                   GyrCondition mode, const std::vector<int>& subgroup) {
    const auto s = normalize_set(g, set);
    const int n = g.order();
    const auto in_s = [&](int x) { return std::binary_search(s.begin(), s.end(), x); };

    // Setwise stability gyr[a,b](S) = S; bijectivity makes image-inside
    // equivalent to image-equal.
    const auto stable = [&](int a, int b) -> ConditionCheck {
        const auto& p = g.gyr(a, b);
        for (int x : s)
            if (!in_s(p(x))) return {false, {a, b, x, p(x)}};
        return {};
    };

    switch (mode) {
        case GyrCondition::identity_on_g_s:
            for (int a = 0; a < n; ++a)
                for (int b : s) {
                    const auto& p = g.gyr(a, b);
                    for (int x = 0; x < n; ++x)
                        if (p(x) != x) return {false, {a, b, x, p(x)}};
                }
            return {};
        case GyrCondition::setwise_g_s:
            for (int a = 0; a < n; ++a)
                for (int b : s)
                    if (auto c = stable(a, b); !c) return c;
            return {};
        case GyrCondition::setwise_g_g:
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (auto c = stable(a, b); !c) return c;
            return {};
        case GyrCondition::setwise_g_h: {
            const auto h = normalize_set(g, subgroup);
            for (int a = 0; a < n; ++a)
                for (int b : h)
                    if (auto c = stable(a, b); !c) return c;
            return {};
        }
        case GyrCondition::point_in_s:
            for (int a = 0; a < n; ++a)
                for (int b : s) {
                    const int image = g.gyr_apply(a, b, b);
                    if (!in_s(image)) return {false, {a, b, image}};
                }
            return {};
    }
    throw GyroError("unknown gyration condition");
}

}  // namespace gyro
