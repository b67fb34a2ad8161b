#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bispan/graph.hpp"

namespace bispan {

enum class Color : unsigned char { Black, Blue, Red };

// color per edge id (indexed by id, sized id_bound)
using Coloring = std::vector<Color>;

struct ColoredGraph {
    MultiGraph graph;
    Coloring colors;
};

// Edge-list text: "n m" then m lines "u v [c]" with c in {b, r, -}.
// Blank lines and lines starting with '#' are skipped.
ColoredGraph read_edge_list(std::istream& in);
ColoredGraph parse_edge_list(const std::string& text);
ColoredGraph load_edge_list(const std::string& path);

// ids are written in edge order; the reader renumbers them 0..m-1
std::string write_edge_list(const MultiGraph& g, const Coloring* colors = nullptr);

std::string to_dot(const MultiGraph& g, const Coloring* colors = nullptr);

Coloring coloring_from(const MultiGraph& g, const EdgeSet& blue, const EdgeSet& red);

}  // namespace bispan
