#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "bispan/bispanning.hpp"

namespace bispan {

struct NamedGraph {
    std::string name;
    std::string description;
    MultiGraph graph;
    TreePair pair;  // coloring as drawn, S blue
};

// canonical names in catalog order
std::vector<std::string> catalog_names();

// Accepts the canonical name, an alias (B4,1 for K4, ...), and TeX-ish spellings such as "B_{7,1}".
// UnknownName otherwise.
NamedGraph named_graph(const std::string& name);

// [{name, description, n, m}]
nlohmann::json catalog_json();

}  // namespace bispan
