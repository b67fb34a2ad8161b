#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bispan/bispanning.hpp"

namespace bispan {

enum class Kind : unsigned char { S, T };
enum class Variant { Tau2, Tau3, Tau4 };
enum class Form { Directed, Undirected, Simple };

const char* to_string(Kind k);
const char* to_string(Variant v);
const char* to_string(Form f);

// D(X,e) ∩ C(Y,e) - e, X the tree holding e
EdgeSet exchange_candidates(const TreePair& tp, EdgeId e);
std::optional<EdgeId> unique_exchange(const TreePair& tp, EdgeId e);
// swap e and f between the trees; throws InvalidExchange unless both results are spanning trees
TreePair apply_exchange(const TreePair& tp, EdgeId e, EdgeId f);

// Per-pair cut/cycle oracle: both trees rooted once, each query is O(n).
class PairOracle {
public:
    PairOracle(const MultiGraph& g, const EdgeSet& S, const EdgeSet& T);
    EdgeSet candidates(EdgeId e) const;
    // -1 unless exactly one candidate
    EdgeId unique(EdgeId e) const;

private:
    struct Rooted {
        std::vector<Vertex> parent;
        std::vector<EdgeId> pedge;
        std::vector<int> depth, tin, tout;
        std::vector<Vertex> child_of;  // edge id -> lower endpoint
    };
    void root(const EdgeSet& t, Rooted& r) const;
    const MultiGraph& g_;
    EdgeSet S_, T_;
    Rooted rs_, rt_;
};

struct ExchangeArc {
    EdgeId e;
    EdgeId f;
    int from;
    int to;
    Kind kind;
};

struct ExchangeGraph {
    MultiGraph host;
    Variant variant = Variant::Tau3;
    Form form = Form::Directed;
    std::vector<EdgeSet> vertices;  // S of each pair, lexicographic order
    std::unordered_map<EdgeSet, int, EdgeSetHash> index;
    std::vector<ExchangeArc> arcs;  // simple form: e = f = -1, from < to
    std::vector<int> out_degree;    // out-degree in the directed graph, kept across forms

    int size() const { return static_cast<int>(vertices.size()); }
    int find(const EdgeSet& S) const;
    TreePair pair(int i) const { return {host, vertices[i], host.edge_set().minus(vertices[i])}; }
    std::vector<std::vector<int>> out_arcs() const;
};

struct TauStats {
    int vertices = 0;
    int edges = 0;  // records in this form
    int min_degree = 0;
    int max_degree = 0;
    int components = 0;
};

// all tree pairs by τ2 closure from a Roskind-Tarjan seed, in lexicographic order of S
std::vector<EdgeSet> enumerate_tree_pairs(const MultiGraph& g);
std::vector<EdgeSet> enumerate_tree_pairs_serial(const MultiGraph& g);
// exhaustive over (n-1)-subsets, for tests
std::vector<EdgeSet> enumerate_tree_pairs_bruteforce(const MultiGraph& g);

inline constexpr std::size_t kMaxPairs = 4'000'000;

ExchangeGraph build_tau(const MultiGraph& g, Variant variant, Form form);
ExchangeGraph build_tau_serial(const MultiGraph& g, Variant variant, Form form);
// converts a directed graph into the undirected or simple form
ExchangeGraph reform(const ExchangeGraph& directed, Form form);

// degrees are the out-degree of the directed graph (twin arcs pair up, so this is also
// the degree after merging twins); edges count records of x's own form
TauStats tau_stats(const ExchangeGraph& x);
int tau_components(const ExchangeGraph& x);
bool tau_connected(const ExchangeGraph& x);
bool tau_strongly_connected(const ExchangeGraph& x);

// one arc per (tree, leaf vertex); from/to are -1
std::vector<ExchangeArc> leaf_unique_exchanges(const TreePair& tp);
ExchangeGraph leaf_restricted_tau3(const MultiGraph& g);

enum class NuConvention {
    DistinctArcs,       // parallel S and T arcs for one transition count twice
    CollapsedParallel,  // one step per transition
};
// collapsed gives 24 at the difficult-W5 catalog pair; distinct arcs gives 66 there
inline constexpr NuConvention kNuConvention = NuConvention::CollapsedParallel;

struct NuResult {
    uint64_t count;
    EdgeSet witness_S;
};

// number of length |E|/2 paths (S,T) -> (T,S) in directed τ3 for one start pair
uint64_t count_full_paths(const ExchangeGraph& tau3, int start, NuConvention conv = kNuConvention);
NuResult nu(const MultiGraph& g, NuConvention conv = kNuConvention);
NuResult nu(const ExchangeGraph& tau3, NuConvention conv = kNuConvention);

std::string tau_to_dot(const ExchangeGraph& x);

}  // namespace bispan
