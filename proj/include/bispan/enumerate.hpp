#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bispan/graph.hpp"

namespace bispan {

enum class GraphKind { General, Simple, Atomic };
const char* to_string(GraphKind k);
// "general", "simple", "atomic"; Parse otherwise
GraphKind parse_graph_kind(const std::string& s);

struct EnumeratedGraph {
    CanonicalCode code;
    MultiGraph graph;  // one representative, colors stripped
};

// supported sizes: general n <= 7, simple and atomic n <= 8
inline constexpr int kMaxEnumGeneral = 7;
inline constexpr int kMaxEnumSimple = 8;

// Closure from K1 under double-attach and edge-split-attach, deduped per level by canonical code,
// then filtered by kind. Sorted by code.
std::vector<EnumeratedGraph> enumerate_bispanning_graphs(int n, GraphKind kind);
std::vector<EnumeratedGraph> enumerate_bispanning_graphs_serial(int n, GraphKind kind);
std::vector<CanonicalCode> enumerate_bispanning(int n, GraphKind kind);
std::size_t count_bispanning(int n, GraphKind kind);

// sum over vertex pairs of (multiplicity - 1)
int parallel_excess(const MultiGraph& g);

}  // namespace bispan
