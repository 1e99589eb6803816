#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gyro/cayley_graph.hpp"
#include "gyro/gyrogroup.hpp"

namespace gyro {

// Text format for gyrogroup tables ('#' comments, blank lines ignored):
//
//   gyrogroup <n>
//   addition
//   <n rows of n integers>
//   gyration names              # optional section, two styles
//   <n rows of n names>
//   perm A = (1 7 5 10 6)(2 3 8 11 14)
//   ...
//
// or, with inline whitespace-free cycle tokens instead of a legend:
//
//   gyration cycles
//   <n rows of n tokens like (8,9)(10,11) or I>
//
// "I" (and "()") always denotes the identity permutation.
struct ParsedTables {
    CayleyTable addition;
    std::optional<GyrationTable> gyrations;
};

ParsedTables parse_table_file(std::string_view text);

// Canonical form: addition rows, then the gyration section in `names`
// style with permutations named I, A, B, ... in row-major first-use
// order. parse/serialize round-trips are byte-stable.
std::string serialize_table_file(const Gyrogroup& g);

// Product of cycles, e.g. "(1 7 5 10 6)(2 3 8 11 14)"; points may be
// separated by spaces or commas; unmentioned points are fixed; "I" and
// "()" are the identity. Repeated or out-of-range points are errors.
Permutation parse_cycles(std::string_view text, int n);

// Inverse of parse_cycles: "I" for the identity, otherwise disjoint
// cycles ordered and started at their least element.
std::string format_cycles(const Permutation& p);

enum class GraphFormat { dot, json };

struct ExportOptions {
    bool generator_labels = false;
    std::string graph_name = "cayley";
};

// DOT: mutual arcs collapse to a single dir=none edge, one-way arcs keep
// their arrow. JSON: {"n":..., "arcs":[[u,v],...], "labels":[[s,...],...]}
// with arcs sorted lexicographically and labels aligned to arcs. Output
// is byte-stable across runs.
std::string export_graph(const DiGraph& g, GraphFormat format, const ExportOptions& opts = {});

}  // namespace gyro
