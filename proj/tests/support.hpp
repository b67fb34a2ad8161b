#pragma once

#include <random>
#include <vector>

#include "bispan/bispanning.hpp"

namespace testing_support {

using namespace bispan;

inline MultiGraph k4() { return MultiGraph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}); }

// hub 0, rim 1-2-4-3
inline MultiGraph w5() { return MultiGraph::build(5, {{0, 1}, {2, 1}, {0, 2}, {4, 2}, {0, 4}, {3, 4}, {0, 3}, {1, 3}}); }

inline MultiGraph b612() {
    return MultiGraph::build(6, {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}});
}

// loop-free multigraph with m random edges
inline MultiGraph random_multigraph(std::mt19937& rng, int n, int m) {
    std::uniform_int_distribution<int> d(0, n - 1);
    std::vector<std::pair<Vertex, Vertex>> es;
    while (static_cast<int>(es.size()) < m) {
        int u = d(rng), v = d(rng);
        if (u != v) es.push_back({u, v});
    }
    return MultiGraph::build(n, es);
}

// a random bispanning graph grown by the two construction steps
inline TreePair random_bispanning(std::mt19937& rng, int n) {
    MultiGraph g(1, {});
    TreePair tp{g, {}, {}};
    while (tp.g.n() < n) {
        int k = tp.g.n();
        std::uniform_int_distribution<int> dv(0, k - 1);
        if (tp.g.m() == 0 || rng() % 2) {
            tp = double_attach(tp, dv(rng), dv(rng));
        } else {
            std::vector<EdgeId> ids = tp.g.edge_set().ids();
            EdgeId e = ids[rng() % ids.size()];
            tp = edge_split_attach(tp, e, dv(rng));
        }
    }
    return tp;
}

// spanning tree check by union-find, independent of the library's version
inline bool is_tree_uf(const MultiGraph& g, const EdgeSet& t) {
    if (t.size() != g.n() - 1) return false;
    std::vector<int> p(g.n());
    for (int i = 0; i < g.n(); ++i) p[i] = i;
    auto find = [&](int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    bool ok = true;
    t.for_each([&](EdgeId e) {
        const Edge& ed = g.edge(e);
        int a = find(ed.u), b = find(ed.v);
        if (a == b) ok = false;
        p[a] = b;
    });
    return ok;
}

}  // namespace testing_support
