#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "bispan/graph.hpp"
#include "bispan/io.hpp"

namespace bispan {

// Two disjoint spanning trees covering all edges; S is drawn blue, T red.
struct TreePair {
    MultiGraph g;
    EdgeSet S;
    EdgeSet T;

    bool valid() const;
    // throws NotBispanning when the invariants fail
    void check() const;
    TreePair swapped() const { return {g, T, S}; }
    Coloring coloring() const { return coloring_from(g, S, T); }
};

TreePair make_pair_from(const MultiGraph& g, const Coloring& c);

class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int x);
    bool unite(int a, int b);
    bool same(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

inline constexpr EdgeId kRootSentinel = -2;
inline constexpr EdgeId kUnreached = -1;

// predecessor edge per vertex of a BFS over edges of color c; root gets kRootSentinel
std::vector<EdgeId> colored_bfs(const MultiGraph& g, Vertex root, const Coloring& coloring, Color c);

// Tries to color e0 by an augmenting swap sequence. Mutates coloring and the union-finds.
bool augment_tree(const MultiGraph& g, Coloring& coloring, EdgeId e0, UnionFind& uf_blue, UnionFind& uf_red);

// Roskind-Tarjan for two trees; precolor may be empty (all black)
std::optional<TreePair> find_two_trees(const MultiGraph& g, const Coloring& precolor = {});

// Nash-Williams partition condition, exhaustive over all partitions (n <= 10)
bool verify_bispanning(const MultiGraph& g);

// strict partition inequality for every non-trivial partition (n <= 10)
bool is_atomic(const MultiGraph& g);

// for a bispanning g: no proper vertex subset of size >= 2 induces 2k-2 edges (n <= 20)
bool is_atomic_fast(const MultiGraph& g);

// vertex set V' with 1 < |V'| < n inducing a bispanning subgraph, smallest first
std::optional<std::vector<Vertex>> find_bispanning_subgraph(const MultiGraph& g);

// calls f on each partition as a block label per vertex; stops when f returns true
template <class F>
bool for_each_partition(int n, F&& f);

TreePair double_attach(const TreePair& tp, Vertex x, Vertex y);
TreePair edge_split_attach(const TreePair& tp, EdgeId splice, Vertex z);

struct Deg3Reduction {
    Vertex v;
    std::array<Vertex, 3> nb;      // x, y, z
    std::array<EdgeId, 3> inc;     // e_x, e_y, e_z
    // index k pairs: 0 = (x,y), 1 = (x,z), 2 = (y,z)
    std::array<MultiGraph, 3> graphs;
    std::array<EdgeId, 3> split;   // e_{a,b}, carries the id of e_b
    std::array<EdgeId, 3> attach;  // e_c
    std::array<std::array<int, 3>, 3> roles;  // {a, b, c} as indices into nb/inc
    // vertex of G -> vertex of the reduced graphs (v maps to -1)
    std::vector<Vertex> vertex_map;
};

// G_{a,b}: delete v, e_a, e_c; e_b becomes {a,b}. Requires an atomic g and deg(v) = 3.
Deg3Reduction reduce_deg3(const MultiGraph& g, Vertex v);
// same construction without the atomic guard
Deg3Reduction reduce_deg3_unchecked(const MultiGraph& g, Vertex v);

struct CliqueSum {
    MultiGraph graph;
    std::vector<EdgeId> map1, map2;    // old id -> new id, -1 for the deleted join edge
    std::vector<Vertex> vmap1, vmap2;  // old vertex -> new vertex
};

// glue d1 = {x1,y1} and d2 = {x2,y2} (as stored); orientation 0 identifies x2~x1, y2~y1.
// G1 keeps its ids and vertices, G2 ids shift by g1.id_bound(), its free vertices follow.
CliqueSum clique2_sum_mapped(const MultiGraph& g1, EdgeId d1, const MultiGraph& g2, EdgeId d2, int orientation);
MultiGraph clique2_sum(const MultiGraph& g1, EdgeId d1, const MultiGraph& g2, EdgeId d2, int orientation);

struct TwoSumParts {
    MultiGraph g1;
    EdgeId d1;
    MultiGraph g2;
    EdgeId d2;
    std::array<Vertex, 2> cut;
    std::vector<Vertex> side1, side2;  // vertices of g in each part (cut vertices included)
};

std::optional<TwoSumParts> decompose_2vconn(const MultiGraph& g);

MultiGraph contract_delete(const MultiGraph& g, EdgeId e, EdgeId f);

Connectivity connectivity_class(const MultiGraph& g);

// --- template implementation

template <class F>
bool for_each_partition(int n, F&& f) {
    // restricted growth strings
    std::vector<int> a(n, 0), mx(n, 0);
    if (n == 0) return f(a, 0);
    while (true) {
        int blocks = 0;
        for (int i = 0; i < n; ++i) blocks = std::max(blocks, a[i] + 1);
        if (f(a, blocks)) return true;
        int i = n - 1;
        while (i > 0 && a[i] == mx[i - 1] + 1) --i;
        if (i == 0) return false;
        ++a[i];
        mx[i] = std::max(mx[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            mx[j] = mx[i];
        }
    }
}

}  // namespace bispan
