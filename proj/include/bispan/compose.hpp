#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "bispan/exchange.hpp"

namespace bispan {

// Product of two exchange graphs (both directed or both undirected, same variant).
// The host is the one-point union of the two hosts at vertex 0; the ids of b are shifted by
// a.host.id_bound() only when the id sets overlap.
ExchangeGraph cartesian_product(const ExchangeGraph& a, const ExchangeGraph& b);

// explicit vertex and arc bijection between a directly built τ3 and a composed one
struct TauIsomorphism {
    std::string theorem;
    std::vector<int> vertex_map;  // vertex of the direct τ3 -> vertex of the composed graph
    std::vector<int> arc_map;     // arc of the direct τ3 -> arc of the composed graph
    int vertices = 0;
    int arcs = 0;
};

// τ3(G) against τ3(G[sub]) x τ3(G/G[sub]), both directed
TauIsomorphism verify_composite_decomposition(const MultiGraph& g, const std::vector<Vertex>& sub);

// join of directed τ3 graphs of the parts of a 2-clique sum; host = clique2_sum(..., orientation)
ExchangeGraph eta_join(const ExchangeGraph& t1, const ExchangeGraph& t2, EdgeId d1, EdgeId d2, int orientation = 0);
// eta_join against build_tau on the sum
TauIsomorphism verify_eta_join(const MultiGraph& g1, EdgeId d1, const MultiGraph& g2, EdgeId d2, int orientation = 0);

enum class ArcClass { Lifted, Leaf, Forwarded, Extra };
const char* to_string(ArcClass c);

struct Deg3Counts {
    int lifted = 0;
    int broken = 0;
    int leaf = 0;
    int forwarded = 0;
    int extra = 0;
};

// a reduction-graph arc that does not survive in G
struct BrokenArc {
    int graph;  // index k into Deg3Reduction::graphs
    EdgeSet S;  // pair of the reduction graph
    EdgeId e, f;
    std::string condition;
};

struct Deg3Composition {
    ExchangeGraph tau;                 // directed τ3 of g
    std::vector<ArcClass> arc_class;   // per arc of tau
    std::vector<BrokenArc> broken;
    Deg3Counts counts;
};

// τ3(g) from the directed τ3 of the three reduction graphs of reduce_deg3(g, v), in its order
Deg3Composition compose_deg3_detailed(const MultiGraph& g, Vertex v, const std::array<const ExchangeGraph*, 3>& parts);
ExchangeGraph compose_deg3(const MultiGraph& g, Vertex v, const ExchangeGraph& t_xy, const ExchangeGraph& t_xz,
                           const ExchangeGraph& t_yz);

// labels every arc of build_tau(g, Tau3, Directed); CompositionMismatch if the classes do not cover it exactly
struct Deg3Classification {
    ExchangeGraph tau;
    std::vector<ArcClass> arc_class;
    std::vector<BrokenArc> broken;
    Deg3Counts counts;
};
Deg3Classification deg3_classify(const MultiGraph& g, Vertex v);

// {theorem, graph, status, counts:{lifted, broken, leaf, forwarded, extra}}
nlohmann::json composition_report(const std::string& theorem, const MultiGraph& g, bool ok,
                                  const Deg3Counts& counts = {}, const std::string& detail = {});

}  // namespace bispan
