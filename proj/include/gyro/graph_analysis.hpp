#pragma once

#include <optional>
#include <utility>

#include "gyro/cayley_graph.hpp"
#include "gyro/permutation.hpp"
#include "gyro/subgyro.hpp"

namespace gyro {

// Exhaustive backtracking search for a graph automorphism mapping `from`
// to `to`. Vertices are pre-colored by (out-degree, in-degree) refined
// once through neighbor degree multisets; candidate images are explored
// in ascending order, so the returned witness is deterministic and an
// empty result is a proof that no such automorphism exists.
std::optional<Permutation> find_automorphism(const DiGraph& g, int from, int to);

struct TransitivityCheck {
    bool transitive = true;
    std::optional<std::pair<int, int>> witness;  // unreachable vertex pair on failure
    explicit operator bool() const { return transitive; }
};

// Vertex-transitivity via orbit of a fixed base vertex: the graph is
// transitive iff some automorphism maps vertex 0 to v for every v.
TransitivityCheck is_vertex_transitive(const DiGraph& g);

// Undirected, every vertex of degree exactly 1, even vertex count.
bool is_perfect_matching(const DiGraph& g);

// Undirected, connected, every vertex of degree exactly 2.
bool is_cycle(const DiGraph& g);

// True iff the weak components of `g` equal the partition blocks as sets
// of sets. Vertex-count mismatch is a domain error.
bool components_equal_partition(const DiGraph& g, const CosetPartition& p);

}  // namespace gyro
