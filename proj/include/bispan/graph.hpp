#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bispan/edgeset.hpp"
#include "bispan/error.hpp"

namespace bispan {

struct Edge {
    EdgeId id;
    Vertex u, v;
};

// Undirected multigraph on vertices 0..n-1 with stable, possibly sparse edge ids.
// Loops are rejected. Immutable after construction.
class MultiGraph {
public:
    MultiGraph() : MultiGraph(1, {}) {}
    MultiGraph(int n, std::vector<Edge> edges);

    // ids 0..m-1 in list order
    static MultiGraph build(int n, const std::vector<std::pair<Vertex, Vertex>>& ends);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(EdgeId e) const { return e >= 0 && e < id_bound() && pos_[e] >= 0; }
    const Edge& edge(EdgeId e) const;
    // one past the largest edge id
    int id_bound() const { return static_cast<int>(pos_.size()); }
    EdgeSet edge_set() const { return all_; }

    // (neighbor, edge id) pairs
    const std::vector<std::pair<Vertex, EdgeId>>& incident(Vertex v) const { return inc_[v]; }
    int degree(Vertex v) const { return static_cast<int>(inc_[v].size()); }
    Vertex other(EdgeId e, Vertex v) const {
        const Edge& ed = edge(e);
        return ed.u == v ? ed.v : ed.u;
    }
    int multiplicity(Vertex a, Vertex b) const;
    bool is_simple() const;

    // the graph restricted to the edges of keep, same vertices and ids
    MultiGraph restrict(const EdgeSet& keep) const;
    // a copy with edges renumbered 0..m-1 in current order
    MultiGraph compact() const;

private:
    int n_ = 1;
    std::vector<Edge> edges_;
    std::vector<int> pos_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> inc_;
    EdgeSet all_;
};

struct VertexPartition {
    std::vector<std::vector<Vertex>> parts;
};

struct Contraction {
    MultiGraph graph;
    // old vertex -> new vertex
    std::vector<Vertex> vertex_map;
    // ids dropped because both ends were inside the contracted set
    EdgeSet removed;
};

// G/X: vertices of X merge into one (numbered by min of X after compaction).
Contraction contract(const MultiGraph& g, const std::vector<Vertex>& xs);

// number of components and a label per vertex
std::pair<int, std::vector<int>> components(const MultiGraph& g);
std::pair<int, std::vector<int>> components(const MultiGraph& g, const EdgeSet& within);

bool is_spanning_tree(const MultiGraph& g, const EdgeSet& t);

// C(T,e): the unique cycle in T+e, including e
EdgeSet fundamental_cycle(const MultiGraph& g, const EdgeSet& t, EdgeId e);
// D(T,e): edges of E\T crossing the split of T-e, including e
EdgeSet fundamental_cut(const MultiGraph& g, const EdgeSet& t, EdgeId e);

bool check_duality(const MultiGraph& g, const EdgeSet& t);

struct Connectivity {
    int vconn;  // 4 means "at least 4"
    int econn;
};
Connectivity connectivity(const MultiGraph& g);
// the same, with exhaustive deletion sets up to cap and no shortcut
Connectivity connectivity_bruteforce(const MultiGraph& g, int cap = 4);

using CanonicalCode = std::string;
CanonicalCode canonical_code(const MultiGraph& g);
// reference: minimum over all n! permutations, for tests
CanonicalCode canonical_code_bruteforce(const MultiGraph& g);

// a vertex-relabeled copy: vertex v becomes perm[v]; ids kept
MultiGraph relabel(const MultiGraph& g, const std::vector<Vertex>& perm);

// induced subgraph on vs, vertices renumbered by position in vs, ids kept
MultiGraph induced(const MultiGraph& g, const std::vector<Vertex>& vs);

std::string describe(const MultiGraph& g);

}  // namespace bispan
