#include "bispan/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace bispan {

namespace {

struct Entry {
    const char* name;
    std::vector<const char*> aliases;
    const char* description;
    const char* edges;  // edge-list text, ids in line order
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {"K1", {"B1"}, "small bispanning graph", R"(1 0
)"},
        {"B2", {}, "small bispanning graph", R"(2 2
0 1 b
0 1 r
)"},
        {"B3,1", {}, "small bispanning graph", R"(3 4
0 1 b
0 1 r
1 2 b
1 2 r
)"},
        {"B3,2", {}, "small bispanning graph", R"(3 4
0 1 b
0 1 r
0 2 b
1 2 r
)"},
        {"K4", {"B4,1"}, "small bispanning graph", R"(4 6
0 1 r
0 2 b
1 2 b
0 3 b
1 3 r
2 3 r
)"},
        {"B4,2", {}, "small bispanning graph", R"(4 6
0 2 b
0 2 r
0 3 b
0 1 r
2 3 b
1 3 r
)"},
        {"B4,3", {}, "small bispanning graph", R"(4 6
0 2 b
0 2 r
1 0 b
1 2 r
3 0 b
3 2 r
)"},
        {"B4,4", {}, "small bispanning graph", R"(4 6
0 2 b
0 2 r
2 3 b
2 3 r
0 1 b
1 3 r
)"},
        {"B4,5", {}, "small bispanning graph", R"(4 6
0 1 b
0 1 r
2 3 b
2 3 r
0 2 b
1 3 r
)"},
        {"B4,6", {}, "small bispanning graph", R"(4 6
0 2 b
0 2 r
2 3 b
2 3 r
0 1 b
2 1 r
)"},
        {"B4,7", {}, "small bispanning graph", R"(4 6
0 2 b
0 2 r
1 3 b
1 3 r
2 3 b
0 3 r
)"},
        {"B4,8", {}, "small bispanning graph", R"(4 6
0 2 b
0 2 r
3 2 b
3 2 r
1 3 b
1 3 r
)"},
        {"B4,9", {}, "small bispanning graph", R"(4 6
0 3 b
0 3 r
1 3 b
1 3 r
2 3 b
2 3 r
)"},
        {"W5", {"B5,1"}, "simple bispanning graph", R"(5 8
0 1 r
1 2 b
0 2 r
2 3 b
0 3 r
3 4 r
0 4 b
4 1 b
)"},
        {"B5,2", {}, "simple bispanning graph", R"(5 8
0 1 b
0 2 r
0 3 r
1 4 r
1 2 b
1 3 r
2 3 b
2 4 b
)"},
        {"B6,1", {}, "simple bispanning graph", R"(6 10
0 1 r
0 2 b
0 3 b
1 2 b
1 3 r
2 3 r
2 4 b
2 5 b
3 5 r
4 5 r
)"},
        {"B6,2", {}, "simple bispanning graph", R"(6 10
0 1 r
0 2 b
0 3 b
1 2 b
1 3 r
2 3 r
2 4 b
2 5 b
3 5 r
3 4 r
)"},
        {"B6,3", {}, "simple bispanning graph", R"(6 10
0 1 r
0 2 b
0 3 b
1 2 b
1 3 r
4 5 r
2 4 r
2 5 b
3 5 r
3 4 b
)"},
        {"B6,4", {}, "simple bispanning graph", R"(6 10
0 1 r
0 2 b
0 3 b
1 2 b
1 3 r
2 3 r
2 4 b
0 5 b
1 5 r
3 4 r
)"},
        {"B6,5", {}, "simple bispanning graph", R"(6 10
0 1 r
0 2 b
0 3 b
1 2 b
1 3 r
2 3 r
2 4 b
0 5 b
3 5 r
3 4 r
)"},
        {"B6,6", {}, "simple bispanning graph", R"(6 10
0 1 r
0 2 b
0 3 b
1 2 b
1 3 r
2 3 r
2 4 b
0 5 b
4 5 r
3 4 r
)"},
        {"B6,7", {}, "simple bispanning graph", R"(6 10
0 1 r
1 2 b
0 2 r
2 3 b
0 3 r
3 4 r
0 4 b
4 1 b
2 5 r
3 5 b
)"},
        {"B6,8", {}, "simple bispanning graph", R"(6 10
0 1 r
1 2 b
0 2 r
2 3 b
0 3 r
3 4 r
0 4 b
4 1 b
2 5 r
0 5 b
)"},
        {"B6,9", {}, "simple bispanning graph", R"(6 10
0 1 r
1 2 b
0 2 r
2 3 b
0 3 r
3 4 r
0 4 b
4 1 b
1 5 r
3 5 b
)"},
        {"B6,10", {}, "simple bispanning graph", R"(6 10
0 1 r
1 2 b
0 2 r
2 5 b
0 3 r
3 4 r
0 4 b
4 1 b
1 5 r
3 5 b
)"},
        {"W6", {"B6,11"}, "simple bispanning graph", R"(6 10
0 1 r
1 2 b
0 2 r
2 3 b
0 3 r
3 4 r
0 4 b
1 5 b
0 5 r
4 5 b
)"},
        {"B6,12", {}, "simple bispanning graph", R"(6 10
0 1 r
1 2 b
4 2 r
2 3 b
0 3 r
3 4 r
0 4 b
1 5 b
3 5 r
4 5 b
)"},
        {"game", {}, "board of the game example, Alice to move", R"(10 18
0 3 r
0 6 b
0 7 r
0 8 r
1 4 r
1 5 b
1 6 b
1 9 r
2 4 r
2 5 b
2 7 b
3 4 b
3 7 b
3 8 b
5 6 r
5 9 r
6 7 r
8 9 b
)"},
        {"exchange-example", {}, "non-unique and unique exchange example", R"(10 18
0 1 r
0 2 b
0 3 b
1 2 r
1 4 r
1 6 b
2 3 r
2 5 r
3 4 b
3 8 r
4 7 b
5 6 r
5 8 b
6 9 b
6 7 b
7 9 r
7 8 r
8 9 b
)"},
        {"composite-W5", {}, "composite graph with a W5 subgraph on vertices 1 2 4 6 7", R"(8 14
0 1 b
0 3 b
0 5 r
1 2 b
1 4 r
1 6 r
2 4 r
2 7 b
3 4 r
3 5 r
4 6 b
4 7 r
5 6 b
6 7 b
)"},
        {"K4+2W6", {}, "2-clique sum of K4 and W6", R"(8 14
0 1 b
0 2 b
0 3 r
0 4 b
0 5 r
1 2 r
2 3 b
4 5 b
5 1 r
3 6 b
3 7 r
4 6 r
4 7 r
6 7 b
)"},
        {"difficult-K4", {}, "difficult start pair", R"(4 6
0 1 b
0 2 b
1 2 r
0 3 r
1 3 r
2 3 b
)"},
        {"difficult-W5", {}, "difficult start pair", R"(5 8
0 2 b
1 2 b
0 3 b
1 3 r
0 4 r
1 4 r
2 4 r
3 4 b
)"},
        {"difficult-B6,12", {}, "difficult start pair", R"(6 10
0 3 r
1 3 b
2 3 b
0 4 b
1 4 r
2 4 r
0 5 b
1 5 r
2 5 b
3 5 r
)"},
        {"B7,1", {}, "difficult start pair", R"(7 12
0 3 b
0 4 b
1 4 b
5 2 b
6 2 b
6 3 b
0 2 r
1 2 r
1 3 r
5 3 r
5 4 r
6 4 r
)"},
        {"B8,1", {}, "difficult start pair", R"(8 14
0 4 b
1 4 r
2 4 b
0 5 b
1 5 r
3 5 r
0 6 r
1 6 b
2 6 r
3 6 b
0 7 r
1 7 b
2 7 b
3 7 r
)"},
        {"B9,1", {}, "difficult start pair", R"(9 16
0 4 b
1 4 b
0 5 r
2 5 r
3 5 b
0 6 r
2 6 b
3 6 r
1 7 b
2 7 b
3 7 r
4 7 r
0 8 b
1 8 r
2 8 r
3 8 b
)"},
        {"B9,2", {}, "difficult start pair", R"(9 16
0 1 b
0 4 r
0 3 r
1 2 r
1 3 r
1 5 b
2 4 b
2 5 b
3 6 b
3 7 b
4 6 b
4 8 r
5 7 r
5 8 r
6 7 r
7 8 b
)"},
        {"B10,1", {}, "difficult start pair", R"(10 18
0 4 b
1 4 r
0 5 r
2 5 b
2 6 r
3 6 b
4 6 r
1 7 b
3 7 r
5 7 b
0 8 b
1 8 r
2 8 b
3 8 r
0 9 r
1 9 b
2 9 r
3 9 b
)"},
        {"B10,2", {}, "difficult start pair", R"(10 18
0 4 r
1 4 b
2 5 r
3 5 b
2 6 b
3 6 r
4 6 b
0 7 b
1 7 r
5 7 r
0 8 b
1 8 b
2 8 r
3 8 r
0 9 r
1 9 r
2 9 b
3 9 b
)"},
        {"B11,1", {}, "difficult start pair", R"(11 20
0 5 b
1 5 r
0 6 r
2 6 r
3 6 b
1 7 b
2 7 b
4 7 r
2 8 r
3 8 b
4 8 b
5 8 r
0 9 r
1 9 b
3 9 r
4 9 b
2 10 b
3 10 r
4 10 r
5 10 b
)"},
        {"B11,2", {}, "difficult start pair", R"(11 20
0 4 b
1 5 r
0 6 r
2 6 b
4 6 r
1 7 b
3 7 r
5 7 b
0 8 r
1 8 b
2 8 b
3 8 r
2 9 r
3 9 b
4 9 r
5 9 b
0 10 b
1 10 r
2 10 r
3 10 b
)"},
        {"B12,1", {}, "difficult start pair", R"(12 22
0 5 b
1 5 r
0 6 r
2 6 b
1 7 b
3 7 r
1 8 b
2 8 r
4 8 b
6 8 r
0 9 r
3 9 b
4 9 r
7 9 b
2 10 b
3 10 b
4 10 r
5 10 r
2 11 r
3 11 r
4 11 b
5 11 b
)"},
        {"B12,2", {}, "difficult start pair", R"(12 22
0 5 b
1 5 r
0 6 b
2 6 b
1 7 r
2 7 r
2 8 b
3 8 b
4 8 r
5 8 r
1 9 b
3 9 b
4 9 r
6 9 r
0 10 r
3 10 r
4 10 b
7 10 b
2 11 r
3 11 r
4 11 b
5 11 b
)"},
        {"B12,3", {}, "difficult start pair", R"(12 22
0 4 r
1 5 b
0 6 b
2 6 r
1 7 r
3 7 b
2 8 b
3 8 r
4 8 r
5 8 b
0 9 b
1 9 r
4 9 b
5 9 r
2 10 b
3 10 r
6 10 b
7 10 r
2 11 r
3 11 b
4 11 b
5 11 r
)"},
        {"B12,4", {}, "difficult start pair", R"(12 22
0 5 b
1 5 r
2 6 b
3 6 r
0 7 r
4 7 b
5 7 r
1 8 b
2 8 r
6 8 b
0 9 b
1 9 r
3 9 b
4 9 r
1 10 b
2 10 r
3 10 b
4 10 r
0 11 r
2 11 b
3 11 r
4 11 b
)"},
        {"B18,1", {}, "square-free, 18 vertices", R"(18 34
0 6 b
1 7 b
2 8 b
3 9 b
4 9 b
3 10 b
5 10 b
0 11 b
4 11 b
5 11 r
0 12 r
1 12 b
2 12 b
9 12 r
5 13 b
6 13 r
7 13 r
9 13 r
0 14 b
7 14 r
8 14 r
10 14 r
2 15 r
4 15 r
6 15 r
10 15 b
1 16 r
3 16 r
6 16 r
8 16 b
2 17 r
3 17 b
7 17 b
11 17 r
)"},
        {"W5-uecbo", {}, "W5 at the start pair of the unique exchange ordering example", R"(5 8
0 1 r
1 2 b
0 2 r
2 3 r
0 3 b
3 4 r
0 4 b
4 1 b
)"},
    };
    return table;
}

std::string normalize(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '_' || c == '{' || c == '}' || c == '$' || c == ' ') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

const Entry* lookup(const std::string& name) {
    std::string key = normalize(name);
    for (const Entry& e : entries()) {
        if (normalize(e.name) == key) return &e;
        for (const char* a : e.aliases)
            if (normalize(a) == key) return &e;
    }
    return nullptr;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const Entry& e : entries()) out.push_back(e.name);
    return out;
}

NamedGraph named_graph(const std::string& name) {
    const Entry* e = lookup(name);
    if (!e) throw Error(ErrorKind::UnknownName, "no catalog graph named '" + name + "'");
    ColoredGraph cg = parse_edge_list(e->edges);
    NamedGraph out{e->name, e->description, cg.graph, make_pair_from(cg.graph, cg.colors)};
    // the drawn coloring of B4,2 is not a tree pair (blue triangle); recolor such entries
    if (!out.pair.valid()) {
        auto tp = find_two_trees(cg.graph);
        if (!tp) throw InternalError("catalog graph '" + out.name + "' is not bispanning");
        out.pair = *tp;
    }
    return out;
}

nlohmann::json catalog_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const Entry& e : entries()) {
        ColoredGraph cg = parse_edge_list(e.edges);
        arr.push_back({{"name", e.name}, {"description", e.description}, {"n", cg.graph.n()}, {"m", cg.graph.m()}});
    }
    return arr;
}

}  // namespace bispan
