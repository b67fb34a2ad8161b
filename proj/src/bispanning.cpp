#include "bispan/bispanning.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace bispan {

bool TreePair::valid() const {
    if (!(S & T).empty()) return false;
    if ((S | T) != g.edge_set()) return false;
    return is_spanning_tree(g, S) && is_spanning_tree(g, T);
}

void TreePair::check() const {
    if (!valid()) throw Error(ErrorKind::NotBispanning, "not a pair of disjoint spanning trees");
}

TreePair make_pair_from(const MultiGraph& g, const Coloring& c) {
    TreePair tp{g, {}, {}};
    for (const Edge& e : g.edges()) {
        Color col = e.id < static_cast<int>(c.size()) ? c[e.id] : Color::Black;
        if (col == Color::Blue) tp.S.insert(e.id);
        else if (col == Color::Red) tp.T.insert(e.id);
    }
    return tp;
}

UnionFind::UnionFind(int n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

int UnionFind::find(int x) {
    int r = x;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[x] != r) {
        int nx = parent_[x];
        parent_[x] = r;
        x = nx;
    }
    return r;
}

bool UnionFind::unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

std::vector<EdgeId> colored_bfs(const MultiGraph& g, Vertex root, const Coloring& coloring, Color c) {
    std::vector<EdgeId> pred(g.n(), kUnreached);
    std::deque<Vertex> q{root};
    pred[root] = kRootSentinel;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (auto [w, id] : g.incident(v)) {
            if (pred[w] == kUnreached && coloring[id] == c) {
                pred[w] = id;
                q.push_back(w);
            }
        }
    }
    return pred;
}

bool augment_tree(const MultiGraph& g, Coloring& color, EdgeId e0, UnionFind& uf_blue, UnionFind& uf_red) {
    const Edge& ed0 = g.edge(e0);
    Vertex v0 = ed0.u;
    std::vector<EdgeId> pred_blue = colored_bfs(g, v0, color, Color::Blue);
    std::vector<EdgeId> pred_red = colored_bfs(g, v0, color, Color::Red);

    constexpr EdgeId none = -1;
    std::vector<EdgeId> label(g.id_bound(), none);
    label[e0] = e0;
    // the root sentinel counts as labelled so walks stop at v0
    auto labelled = [&](EdgeId pe) { return pe < 0 ? pe == kRootSentinel : label[pe] != none; };

    std::deque<EdgeId> q{e0};
    while (!q.empty()) {
        EdgeId e = q.front();
        q.pop_front();
        const Edge& ed = g.edge(e);
        Color c = color[e] == Color::Blue ? Color::Red : Color::Blue;
        UnionFind& uf = c == Color::Blue ? uf_blue : uf_red;
        const std::vector<EdgeId>& pred = c == Color::Blue ? pred_blue : pred_red;

        if (!uf.same(ed.u, ed.v)) {
            uf.unite(ed.u, ed.v);
            while (e != e0) {
                std::swap(c, color[e]);
                e = label[e];
            }
            color[e] = c;
            return true;
        }

        Vertex x;
        if (ed.u != v0 && !labelled(pred[ed.u])) x = ed.u;
        else if (ed.v != v0 && !labelled(pred[ed.v])) x = ed.v;
        else continue;  // the whole cycle is labelled already (e.g. a parallel edge)

        std::vector<EdgeId> stack;
        while (x != v0 && !labelled(pred[x])) {
            EdgeId pe = pred[x];
            if (pe == kUnreached) throw InternalError("augment_tree: cycle walk left the colored tree");
            stack.push_back(pe);
            x = g.other(pe, x);
        }
        while (!stack.empty()) {
            EdgeId pe = stack.back();
            stack.pop_back();
            label[pe] = e;
            q.push_back(pe);
        }
    }
    return false;
}

std::optional<TreePair> find_two_trees(const MultiGraph& g, const Coloring& precolor) {
    if (g.m() != 2 * g.n() - 2) return std::nullopt;
    Coloring color(g.id_bound(), Color::Black);
    for (const Edge& e : g.edges())
        if (e.id < static_cast<int>(precolor.size())) color[e.id] = precolor[e.id];
    UnionFind ub(g.n()), ur(g.n());
    for (const Edge& e : g.edges()) {
        Color c = color[e.id];
        if (c == Color::Blue && ub.unite(e.u, e.v)) continue;
        if (c == Color::Red && ur.unite(e.u, e.v)) continue;
        color[e.id] = Color::Black;
    }
    for (const Edge& e : g.edges()) {
        if (color[e.id] != Color::Black) continue;
        if (ub.unite(e.u, e.v)) {
            color[e.id] = Color::Blue;
        } else if (ur.unite(e.u, e.v)) {
            color[e.id] = Color::Red;
        } else if (!augment_tree(g, color, e.id, ub, ur)) {
            return std::nullopt;
        }
    }
    TreePair tp = make_pair_from(g, color);
    // all edges colored and both forests have n-1 edges, so both are spanning trees
    if (!tp.valid()) throw InternalError("find_two_trees produced an invalid pair");
    return tp;
}

namespace {

void require_small(const MultiGraph& g, int limit, const char* what) {
    if (g.n() > limit) throw Error(ErrorKind::TooLarge, std::string(what) + " supports n <= " + std::to_string(limit));
}

}  // namespace

bool verify_bispanning(const MultiGraph& g) {
    require_small(g, 10, "verify_bispanning");
    if (g.m() != 2 * g.n() - 2) return false;
    bool violated = for_each_partition(g.n(), [&](const std::vector<int>& block, int parts) {
        int cross = 0;
        for (const Edge& e : g.edges())
            if (block[e.u] != block[e.v]) ++cross;
        return cross < 2 * (parts - 1);
    });
    return !violated;
}

bool is_atomic(const MultiGraph& g) {
    require_small(g, 10, "is_atomic");
    if (!verify_bispanning(g)) throw Error(ErrorKind::NotBispanning, "is_atomic needs a bispanning graph");
    int n = g.n();
    bool tight = for_each_partition(n, [&](const std::vector<int>& block, int parts) {
        if (parts == 1 || parts == n) return false;
        int cross = 0;
        for (const Edge& e : g.edges())
            if (block[e.u] != block[e.v]) ++cross;
        return cross <= 2 * (parts - 1);
    });
    return !tight;
}

namespace {

// induced edge count per vertex mask, no bispanning check on g
std::optional<std::vector<Vertex>> tight_subset(const MultiGraph& g) {
    int n = g.n();
    if (n > 20) throw Error(ErrorKind::TooLarge, "subset search supports n <= 20");
    std::vector<std::pair<int, uint32_t>> masks;
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int k = std::popcount(s);
        if (k < 2 || k >= n) continue;
        masks.push_back({k, s});
    }
    std::sort(masks.begin(), masks.end());
    for (auto [k, s] : masks) {
        int inside = 0;
        for (const Edge& e : g.edges())
            if ((s >> e.u & 1u) && (s >> e.v & 1u)) ++inside;
        // a bispanning graph has at most 2k-2 edges inside any k vertices, and equality forces two trees
        if (inside == 2 * k - 2) {
            std::vector<Vertex> vs;
            for (Vertex v = 0; v < n; ++v)
                if (s >> v & 1u) vs.push_back(v);
            return vs;
        }
    }
    return std::nullopt;
}

void require_bispanning(const MultiGraph& g) {
    if (!find_two_trees(g)) throw Error(ErrorKind::NotBispanning, "graph is not bispanning");
}

bool atomic_fast(const MultiGraph& g) { return !tight_subset(g).has_value(); }

}  // namespace

bool is_atomic_fast(const MultiGraph& g) { return atomic_fast(g); }

std::optional<std::vector<Vertex>> find_bispanning_subgraph(const MultiGraph& g) {
    require_bispanning(g);
    return tight_subset(g);
}

TreePair double_attach(const TreePair& tp, Vertex x, Vertex y) {
    const MultiGraph& g = tp.g;
    if (x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw Error(ErrorKind::VertexOutOfRange, "double_attach");
    std::vector<Edge> es = g.edges();
    Vertex v = g.n();
    EdgeId ex = g.id_bound(), ey = g.id_bound() + 1;
    es.push_back({ex, x, v});
    es.push_back({ey, y, v});
    TreePair out{MultiGraph(g.n() + 1, std::move(es)), tp.S, tp.T};
    out.S.insert(ex);
    out.T.insert(ey);
    return out;
}

TreePair edge_split_attach(const TreePair& tp, EdgeId splice, Vertex z) {
    const MultiGraph& g = tp.g;
    if (!g.has_edge(splice)) throw Error(ErrorKind::NoSuchEdge, "edge id " + std::to_string(splice));
    if (z < 0 || z >= g.n()) throw Error(ErrorKind::VertexOutOfRange, "edge_split_attach");
    const Edge sp = g.edge(splice);
    Vertex v = g.n();
    EdgeId ex = g.id_bound(), ey = ex + 1, ez = ex + 2;
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (e.id != splice) es.push_back(e);
    es.push_back({ex, sp.u, v});
    es.push_back({ey, sp.v, v});
    es.push_back({ez, z, v});
    TreePair out{MultiGraph(g.n() + 1, std::move(es)), tp.S, tp.T};
    EdgeSet& home = tp.S.contains(splice) ? out.S : out.T;
    EdgeSet& away = tp.S.contains(splice) ? out.T : out.S;
    home.erase(splice);
    home.insert(ex);
    home.insert(ey);
    away.insert(ez);
    return out;
}

Deg3Reduction reduce_deg3_unchecked(const MultiGraph& g, Vertex v) {
    if (v < 0 || v >= g.n()) throw Error(ErrorKind::VertexOutOfRange, "reduce_deg3");
    if (g.degree(v) != 3) throw Error(ErrorKind::WrongDegree, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    Deg3Reduction r;
    r.v = v;
    for (int i = 0; i < 3; ++i) {
        r.nb[i] = g.incident(v)[i].first;
        r.inc[i] = g.incident(v)[i].second;
    }
    r.vertex_map.assign(g.n(), -1);
    for (Vertex w = 0; w < g.n(); ++w)
        if (w != v) r.vertex_map[w] = w < v ? w : w - 1;
    r.roles = {{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (int k = 0; k < 3; ++k) {
        auto [a, b, c] = r.roles[k];
        std::vector<Edge> es;
        for (const Edge& e : g.edges()) {
            if (e.id == r.inc[a] || e.id == r.inc[c]) continue;
            if (e.id == r.inc[b]) {
                es.push_back({e.id, r.vertex_map[r.nb[a]], r.vertex_map[r.nb[b]]});
                continue;
            }
            es.push_back({e.id, r.vertex_map[e.u], r.vertex_map[e.v]});
        }
        // a reduction can create a loop only when a = b, which needs parallel edges at v
        r.graphs[k] = MultiGraph(g.n() - 1, std::move(es));
        r.split[k] = r.inc[b];
        r.attach[k] = r.inc[c];
    }
    return r;
}

Deg3Reduction reduce_deg3(const MultiGraph& g, Vertex v) {
    if (v < 0 || v >= g.n()) throw Error(ErrorKind::VertexOutOfRange, "reduce_deg3");
    if (g.degree(v) != 3) throw Error(ErrorKind::WrongDegree, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    require_bispanning(g);
    if (!atomic_fast(g)) throw Error(ErrorKind::NotAtomic, "reduce_deg3 needs an atomic graph");
    return reduce_deg3_unchecked(g, v);
}

CliqueSum clique2_sum_mapped(const MultiGraph& g1, EdgeId d1, const MultiGraph& g2, EdgeId d2, int orientation) {
    const Edge a = g1.edge(d1);
    const Edge b = g2.edge(d2);
    CliqueSum out;
    out.vmap1.resize(g1.n());
    std::iota(out.vmap1.begin(), out.vmap1.end(), 0);
    out.vmap2.assign(g2.n(), -1);
    out.vmap2[b.u] = orientation == 0 ? a.u : a.v;
    out.vmap2[b.v] = orientation == 0 ? a.v : a.u;
    int next = g1.n();
    for (Vertex w = 0; w < g2.n(); ++w)
        if (out.vmap2[w] < 0) out.vmap2[w] = next++;
    std::vector<Edge> es;
    out.map1.assign(g1.id_bound(), -1);
    out.map2.assign(g2.id_bound(), -1);
    for (const Edge& e : g1.edges()) {
        if (e.id == d1) continue;
        out.map1[e.id] = e.id;
        es.push_back(e);
    }
    int shift = g1.id_bound();
    for (const Edge& e : g2.edges()) {
        if (e.id == d2) continue;
        out.map2[e.id] = e.id + shift;
        es.push_back({e.id + shift, out.vmap2[e.u], out.vmap2[e.v]});
    }
    out.graph = MultiGraph(next, std::move(es));
    return out;
}

MultiGraph clique2_sum(const MultiGraph& g1, EdgeId d1, const MultiGraph& g2, EdgeId d2, int orientation) {
    return clique2_sum_mapped(g1, d1, g2, d2, orientation).graph;
}

std::optional<TwoSumParts> decompose_2vconn(const MultiGraph& g) {
    if (g.n() < 4) return std::nullopt;
    require_bispanning(g);
    if (!atomic_fast(g)) return std::nullopt;
    Connectivity c = connectivity(g);
    if (c.vconn != 2) return std::nullopt;
    int n = g.n();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = x + 1; y < n; ++y) {
            // components of G - {x,y}
            std::vector<int> comp(n, -1);
            int count = 0;
            for (Vertex s = 0; s < n; ++s) {
                if (s == x || s == y || comp[s] >= 0) continue;
                std::vector<Vertex> st{s};
                comp[s] = count;
                while (!st.empty()) {
                    Vertex u = st.back();
                    st.pop_back();
                    for (auto [w, id] : g.incident(u)) {
                        if (w == x || w == y || comp[w] >= 0) continue;
                        comp[w] = count;
                        st.push_back(w);
                    }
                }
                ++count;
            }
            if (count < 2) continue;
            // try groupings of components into two sides, smallest-first by mask
            for (uint32_t mask = 1; mask + 1 < (1u << count); ++mask) {
                if (!(mask & 1u)) continue;
                std::vector<Vertex> side1{x, y}, side2{x, y};
                for (Vertex w = 0; w < n; ++w) {
                    if (w == x || w == y) continue;
                    (mask >> comp[w] & 1u ? side1 : side2).push_back(w);
                }
                std::sort(side1.begin(), side1.end());
                std::sort(side2.begin(), side2.end());
                auto part = [&](const std::vector<Vertex>& side) {
                    MultiGraph sub = induced(g, side);
                    std::vector<Edge> es = sub.edges();
                    Vertex lx = static_cast<Vertex>(std::lower_bound(side.begin(), side.end(), x) - side.begin());
                    Vertex ly = static_cast<Vertex>(std::lower_bound(side.begin(), side.end(), y) - side.begin());
                    es.push_back({g.id_bound(), lx, ly});
                    return MultiGraph(static_cast<int>(side.size()), std::move(es));
                };
                MultiGraph g1 = part(side1), g2 = part(side2);
                if (!find_two_trees(g1) || !find_two_trees(g2)) continue;
                return TwoSumParts{g1, g.id_bound(), g2, g.id_bound(), {x, y}, side1, side2};
            }
        }
    }
    return std::nullopt;
}

MultiGraph contract_delete(const MultiGraph& g, EdgeId e, EdgeId f) {
    if (e == f) throw Error(ErrorKind::SameEdge, "contract_delete needs two different edges");
    const Edge ed = g.edge(e);
    g.edge(f);
    require_bispanning(g);
    if (!atomic_fast(g)) throw Error(ErrorKind::NotAtomic, "contract_delete needs an atomic graph");
    Contraction c = contract(g, {ed.u, ed.v});
    EdgeSet keep = c.graph.edge_set();
    keep.erase(f);
    return c.graph.restrict(keep);
}

Connectivity connectivity_class(const MultiGraph& g) {
    require_bispanning(g);
    return connectivity(g);
}

}  // namespace bispan
