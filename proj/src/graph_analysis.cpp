#include "gyro/graph_analysis.hpp"

#include <algorithm>
#include <numeric>

#include "gyro/error.hpp"

namespace gyro {

namespace {

// Vertex colors: (out-degree, in-degree) refined once through the
// multiset of neighbor degree pairs. Automorphisms preserve colors, so
// the search only tries same-colored images.
std::vector<int> refined_colors(const DiGraph& g) {
    const int n = g.order();
    const auto in_deg = g.in_degrees();

    std::vector<std::pair<int, int>> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = {static_cast<int>(g.out(v).size()), in_deg[v]};

    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
        auto& sig = signature[v];
        sig.push_back(deg[v].first);
        sig.push_back(deg[v].second);
        std::vector<std::pair<int, int>> out_neigh, in_neigh;
        for (int w : g.out(v)) out_neigh.push_back(deg[w]);
        for (int u = 0; u < n; ++u)
            if (g.has_arc(u, v)) in_neigh.push_back(deg[u]);
        std::sort(out_neigh.begin(), out_neigh.end());
        std::sort(in_neigh.begin(), in_neigh.end());
        sig.push_back(-1);
        for (auto [a, b] : out_neigh) {
            sig.push_back(a);
            sig.push_back(b);
        }
        sig.push_back(-1);
        for (auto [a, b] : in_neigh) {
            sig.push_back(a);
            sig.push_back(b);
        }
    }

    std::vector<std::vector<int>> palette;
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) {
        auto it = std::find(palette.begin(), palette.end(), signature[v]);
        if (it == palette.end()) {
            palette.push_back(signature[v]);
            color[v] = static_cast<int>(palette.size()) - 1;
        } else {
            color[v] = static_cast<int>(it - palette.begin());
        }
    }
    return color;
}

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const DiGraph& g)
        : g_(g), n_(g.order()), color_(refined_colors(g)), perm_(n_, -1), used_(n_, 0) {}

    std::optional<Permutation> mapping(int from, int to) {
        if (color_[from] != color_[to]) return std::nullopt;
        if (g_.has_arc(from, from) != g_.has_arc(to, to)) return std::nullopt;
        order_.clear();
        order_.push_back(from);
        for (int v = 0; v < n_; ++v)
            if (v != from) order_.push_back(v);
        std::fill(perm_.begin(), perm_.end(), -1);
        std::fill(used_.begin(), used_.end(), 0);
        perm_[from] = to;
        used_[to] = 1;
        if (!extend(1)) return std::nullopt;
        return Permutation(perm_);
    }

private:
    bool compatible(int u, int w, size_t depth) const {
        if (g_.has_arc(u, u) != g_.has_arc(w, w)) return false;
        for (size_t i = 0; i < depth; ++i) {
            const int v = order_[i];
            const int pv = perm_[v];
            if (g_.has_arc(u, v) != g_.has_arc(w, pv)) return false;
            if (g_.has_arc(v, u) != g_.has_arc(pv, w)) return false;
        }
        return true;
    }

    bool extend(size_t depth) {
        if (depth == order_.size()) return true;
        const int u = order_[depth];
        for (int w = 0; w < n_; ++w) {
            if (used_[w] || color_[w] != color_[u]) continue;
            if (!compatible(u, w, depth)) continue;
            perm_[u] = w;
            used_[w] = 1;
            if (extend(depth + 1)) return true;
            perm_[u] = -1;
            used_[w] = 0;
        }
        return false;
    }

    const DiGraph& g_;
    int n_;
    std::vector<int> color_;
    std::vector<int> order_;
    std::vector<int> perm_;
    std::vector<char> used_;
};

}  // namespace

std::optional<Permutation> find_automorphism(const DiGraph& g, int from, int to) {
    if (from < 0 || from >= g.order() || to < 0 || to >= g.order())
        throw GyroError("vertex out of range");
    if (from == to) return Permutation::identity(g.order());
    return AutomorphismSearch(g).mapping(from, to);
}

TransitivityCheck is_vertex_transitive(const DiGraph& g) {
    if (g.order() <= 1) return {};
    AutomorphismSearch search(g);
    for (int v = 1; v < g.order(); ++v)
        if (!search.mapping(0, v)) return {false, std::make_pair(0, v)};
    return {};
}

bool is_perfect_matching(const DiGraph& g) {
    if (!is_undirected(g)) return false;
    if (g.order() % 2 != 0) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.out(v).size() != 1) return false;
    return true;
}

bool is_cycle(const DiGraph& g) {
    if (!is_undirected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.out(v).size() != 2) return false;
    return connected_components(g).size() == 1;
}

bool components_equal_partition(const DiGraph& g, const CosetPartition& p) {
    std::vector<int> covered;
    for (const auto& block : p.blocks) covered.insert(covered.end(), block.begin(), block.end());
    std::sort(covered.begin(), covered.end());
    std::vector<int> expect(g.order());
    std::iota(expect.begin(), expect.end(), 0);
    if (covered != expect)
        throw GyroError("partition does not cover the graph's vertex set exactly");

    // both sides are canonical: blocks sorted, ordered by least element
    return connected_components(g) == p.blocks;
}

}  // namespace gyro
