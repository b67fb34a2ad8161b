#include "bispan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bispan {

const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::EdgeInTree: return "EdgeInTree";
    case ErrorKind::EdgeNotInTree: return "EdgeNotInTree";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotBispanning: return "NotBispanning";
    case ErrorKind::NotAtomic: return "NotAtomic";
    case ErrorKind::WrongDegree: return "WrongDegree";
    case ErrorKind::SameEdge: return "SameEdge";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::InvalidExchange: return "InvalidExchange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SeamMismatch: return "SeamMismatch";
    case ErrorKind::FormMismatch: return "FormMismatch";
    case ErrorKind::NotBispanningSubgraph: return "NotBispanningSubgraph";
    case ErrorKind::IsoCheckFailed: return "IsoCheckFailed";
    case ErrorKind::CompositionMismatch: return "CompositionMismatch";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::WrongPhase: return "WrongPhase";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::IllegalFix: return "IllegalFix";
    case ErrorKind::EmptyHistory: return "EmptyHistory";
    case ErrorKind::Parse: return "Parse";
    }
    return "?";
}

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw Error(ErrorKind::InvalidInput, "negative vertex count");
    int bound = 0;
    for (const Edge& e : edges_) {
        if (e.id < 0) throw Error(ErrorKind::InvalidInput, "negative edge id");
        if (e.id >= kMaxEdgeId) throw Error(ErrorKind::TooLarge, "edge id " + std::to_string(e.id));
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge " + std::to_string(e.id) + " (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (e.u == e.v) throw Error(ErrorKind::LoopEdge, "edge " + std::to_string(e.id) + " at vertex " + std::to_string(e.u));
        bound = std::max(bound, e.id + 1);
    }
    pos_.assign(bound, -1);
    inc_.assign(n_, {});
    for (int i = 0; i < m(); ++i) {
        const Edge& e = edges_[i];
        if (pos_[e.id] >= 0) throw Error(ErrorKind::InvalidInput, "duplicate edge id " + std::to_string(e.id));
        pos_[e.id] = i;
        all_.insert(e.id);
        inc_[e.u].push_back({e.v, e.id});
        inc_[e.v].push_back({e.u, e.id});
    }
}

MultiGraph MultiGraph::build(int n, const std::vector<std::pair<Vertex, Vertex>>& ends) {
    std::vector<Edge> es;
    es.reserve(ends.size());
    for (std::size_t i = 0; i < ends.size(); ++i) es.push_back({static_cast<EdgeId>(i), ends[i].first, ends[i].second});
    return MultiGraph(n, std::move(es));
}

const Edge& MultiGraph::edge(EdgeId e) const {
    if (!has_edge(e)) throw Error(ErrorKind::NoSuchEdge, "edge id " + std::to_string(e));
    return edges_[pos_[e]];
}

int MultiGraph::multiplicity(Vertex a, Vertex b) const {
    int c = 0;
    for (auto [w, id] : inc_[a])
        if (w == b) ++c;
    return c;
}

bool MultiGraph::is_simple() const {
    for (Vertex v = 0; v < n_; ++v) {
        std::vector<Vertex> ns;
        for (auto [w, id] : inc_[v]) ns.push_back(w);
        std::sort(ns.begin(), ns.end());
        if (std::adjacent_find(ns.begin(), ns.end()) != ns.end()) return false;
    }
    return true;
}

MultiGraph MultiGraph::restrict(const EdgeSet& keep) const {
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (keep.contains(e.id)) es.push_back(e);
    return MultiGraph(n_, std::move(es));
}

MultiGraph MultiGraph::compact() const {
    std::vector<Edge> es = edges_;
    for (std::size_t i = 0; i < es.size(); ++i) es[i].id = static_cast<EdgeId>(i);
    return MultiGraph(n_, std::move(es));
}

Contraction contract(const MultiGraph& g, const std::vector<Vertex>& xs) {
    if (xs.empty()) throw Error(ErrorKind::EmptySet, "contract needs a non-empty vertex set");
    std::vector<char> in(g.n(), 0);
    for (Vertex x : xs) {
        if (x < 0 || x >= g.n()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(x));
        in[x] = 1;
    }
    Vertex rep = *std::min_element(xs.begin(), xs.end());
    std::vector<Vertex> map(g.n(), -1);
    int next = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (in[v] && v != rep) continue;
        map[v] = next++;
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (in[v]) map[v] = map[rep];
    Contraction out;
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (in[e.u] && in[e.v]) {
            out.removed.insert(e.id);
            continue;
        }
        es.push_back({e.id, map[e.u], map[e.v]});
    }
    out.graph = MultiGraph(next, std::move(es));
    out.vertex_map = std::move(map);
    return out;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

}  // namespace

std::pair<int, std::vector<int>> components(const MultiGraph& g, const EdgeSet& within) {
    std::vector<int> label(g.n(), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (label[s] >= 0) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [w, id] : g.incident(v)) {
                if (label[w] >= 0 || !within.contains(id)) continue;
                label[w] = count;
                stack.push_back(w);
            }
        }
        ++count;
    }
    return {count, label};
}

std::pair<int, std::vector<int>> components(const MultiGraph& g) { return components(g, g.edge_set()); }

bool is_spanning_tree(const MultiGraph& g, const EdgeSet& t) {
    if (!t.subset_of(g.edge_set())) return false;
    if (t.size() != g.n() - 1) return false;
    Dsu d(g.n());
    bool acyclic = true;
    t.for_each([&](EdgeId e) {
        const Edge& ed = g.edge(e);
        if (!d.unite(ed.u, ed.v)) acyclic = false;
    });
    return acyclic;
}

namespace {

// path of tree edges between a and b, by BFS inside t
EdgeSet tree_path(const MultiGraph& g, const EdgeSet& t, Vertex a, Vertex b) {
    std::vector<EdgeId> pred(g.n(), -2);
    pred[a] = -1;
    std::vector<Vertex> queue{a};
    for (std::size_t i = 0; i < queue.size() && pred[b] == -2; ++i) {
        Vertex v = queue[i];
        for (auto [w, id] : g.incident(v)) {
            if (pred[w] != -2 || !t.contains(id)) continue;
            pred[w] = id;
            queue.push_back(w);
        }
    }
    if (pred[b] == -2) throw Error(ErrorKind::NotATree, "endpoints not connected in tree");
    EdgeSet path;
    for (Vertex x = b; x != a;) {
        EdgeId id = pred[x];
        path.insert(id);
        x = g.other(id, x);
    }
    return path;
}

}  // namespace

EdgeSet fundamental_cycle(const MultiGraph& g, const EdgeSet& t, EdgeId e) {
    if (!g.has_edge(e)) throw Error(ErrorKind::NoSuchEdge, "edge id " + std::to_string(e));
    if (t.contains(e)) throw Error(ErrorKind::EdgeInTree, "edge " + std::to_string(e) + " is in the tree");
    if (!is_spanning_tree(g, t)) throw Error(ErrorKind::NotATree, "edge set is not a spanning tree");
    const Edge& ed = g.edge(e);
    EdgeSet c = tree_path(g, t, ed.u, ed.v);
    c.insert(e);
    return c;
}

EdgeSet fundamental_cut(const MultiGraph& g, const EdgeSet& t, EdgeId e) {
    if (!g.has_edge(e)) throw Error(ErrorKind::NoSuchEdge, "edge id " + std::to_string(e));
    if (!t.contains(e)) throw Error(ErrorKind::EdgeNotInTree, "edge " + std::to_string(e) + " is not in the tree");
    if (!is_spanning_tree(g, t)) throw Error(ErrorKind::NotATree, "edge set is not a spanning tree");
    EdgeSet rest = t;
    rest.erase(e);
    auto [count, label] = components(g, rest);
    EdgeSet d;
    for (const Edge& ed : g.edges())
        if (label[ed.u] != label[ed.v] && (!t.contains(ed.id) || ed.id == e)) d.insert(ed.id);
    return d;
}

bool check_duality(const MultiGraph& g, const EdgeSet& t) {
    EdgeSet co = g.edge_set().minus(t);
    bool ok = true;
    std::vector<EdgeSet> cut_of(g.id_bound());
    t.for_each([&](EdgeId e) { cut_of[e] = fundamental_cut(g, t, e); });
    co.for_each([&](EdgeId f) {
        EdgeSet c = fundamental_cycle(g, t, f);
        t.for_each([&](EdgeId e) {
            if (c.contains(e) != cut_of[e].contains(f)) ok = false;
        });
    });
    return ok;
}

namespace {

bool connected_without(const MultiGraph& g, const std::vector<char>& gone_v, const EdgeSet& edges) {
    int start = -1, alive = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!gone_v[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (auto [w, id] : g.incident(v)) {
            if (seen[w] || gone_v[w] || !edges.contains(id)) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == alive;
}

// calls f on every k-subset of 0..n-1 until f returns true
template <class F>
bool any_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return false;
    while (true) {
        if (f(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Connectivity connectivity_bruteforce(const MultiGraph& g, int cap) {
    std::vector<char> none(g.n(), 0);
    if (!connected_without(g, none, g.edge_set())) throw Error(ErrorKind::Disconnected, "graph is disconnected");
    if (g.n() < 2) throw Error(ErrorKind::InvalidInput, "connectivity needs at least two vertices");
    Connectivity c{cap, cap};
    // vertex connectivity: fewest deletions leaving a disconnected graph or a single vertex
    for (int k = 1; k < cap; ++k) {
        bool hit = any_subset(g.n(), k, [&](const std::vector<int>& del) {
            std::vector<char> gone(g.n(), 0);
            for (int v : del) gone[v] = 1;
            if (g.n() - k <= 1) return true;
            return !connected_without(g, gone, g.edge_set());
        });
        if (hit) {
            c.vconn = k;
            break;
        }
    }
    std::vector<EdgeId> ids = g.edge_set().ids();
    for (int k = 1; k < cap; ++k) {
        bool hit = any_subset(static_cast<int>(ids.size()), k, [&](const std::vector<int>& del) {
            EdgeSet rest = g.edge_set();
            for (int i : del) rest.erase(ids[i]);
            return !connected_without(g, none, rest);
        });
        if (hit) {
            c.econn = k;
            break;
        }
    }
    return c;
}

Connectivity connectivity(const MultiGraph& g) { return connectivity_bruteforce(g, 4); }

MultiGraph relabel(const MultiGraph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.push_back({e.id, perm[e.u], perm[e.v]});
    return MultiGraph(g.n(), std::move(es));
}

MultiGraph induced(const MultiGraph& g, const std::vector<Vertex>& vs) {
    std::vector<Vertex> map(g.n(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) map[vs[i]] = static_cast<Vertex>(i);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (map[e.u] >= 0 && map[e.v] >= 0) es.push_back({e.id, map[e.u], map[e.v]});
    return MultiGraph(static_cast<int>(vs.size()), std::move(es));
}

namespace {

using Matrix = std::vector<std::vector<unsigned char>>;

Matrix adjacency(const MultiGraph& g) {
    Matrix a(g.n(), std::vector<unsigned char>(g.n(), 0));
    for (const Edge& e : g.edges()) {
        ++a[e.u][e.v];
        ++a[e.v][e.u];
    }
    return a;
}

// stable colour refinement; colours are ranks of canonical signatures
std::vector<int> refine(const Matrix& a) {
    int n = static_cast<int>(a.size());
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int w = 0; w < n; ++w) d += a[v][w];
        color[v] = d;
    }
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (int w = 0; w < n; ++w)
                if (a[v][w]) nb.push_back(color[w] * 256 + a[v][w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        int now = static_cast<int>(uniq.size());
        if (now == classes) break;
        classes = now;
    }
    return color;
}

struct CanonSearch {
    const Matrix& a;
    int n;
    std::vector<int> cell_of_pos;  // required colour at each position
    std::vector<int> color;
    std::vector<int> order;
    std::vector<char> used;
    std::string best;
    std::string cur;
    bool have_best = false;
    long updates = 0;

    // cur holds the code prefix for positions < p; state: 0 equal to best prefix, -1 already smaller
    void dfs(int p, int state) {
        if (p == n) {
            if (!have_best || state < 0) {
                best = cur;
                have_best = true;
                ++updates;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != cell_of_pos[p]) continue;
            std::size_t mark = cur.size();
            int st = state;
            bool prune = false;
            for (int q = 0; q < p; ++q) {
                char ch = static_cast<char>(a[v][order[q]]);
                cur.push_back(ch);
                if (have_best && st == 0) {
                    char b = best[cur.size() - 1];
                    if (ch > b) {
                        prune = true;
                        break;
                    }
                    if (ch < b) st = -1;
                }
            }
            if (!prune) {
                used[v] = 1;
                order[p] = v;
                long before = updates;
                dfs(p + 1, st);
                used[v] = 0;
                // best now extends our prefix, so later siblings compare against it from equality
                if (updates != before) state = 0;
            }
            cur.resize(mark);
        }
    }
};

}  // namespace

CanonicalCode canonical_code(const MultiGraph& g) {
    if (g.n() > 12) throw Error(ErrorKind::TooLarge, "canonical_code supports n <= 12");
    Matrix a = adjacency(g);
    int n = g.n();
    std::vector<int> color = refine(a);
    std::vector<int> sorted = color;
    std::sort(sorted.begin(), sorted.end());
    CanonSearch s{a, n, sorted, color, std::vector<int>(n), std::vector<char>(n, 0), {}, {}, false};
    s.dfs(0, 0);
    std::string code;
    code.push_back(static_cast<char>(n));
    for (int c : sorted) code.push_back(static_cast<char>(c));
    code += s.best;
    return code;
}

CanonicalCode canonical_code_bruteforce(const MultiGraph& g) {
    Matrix a = adjacency(g);
    int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool have = false;
    do {
        std::string cur;
        for (int p = 1; p < n; ++p)
            for (int q = 0; q < p; ++q) cur.push_back(static_cast<char>(a[perm[p]][perm[q]]));
        if (!have || cur < best) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::string(1, static_cast<char>(n)) + best;
}

std::string describe(const MultiGraph& g) {
    std::ostringstream os;
    os << "n=" << g.n() << " m=" << g.m() << " [";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) os << ' ';
        first = false;
        os << e.id << ':' << e.u << '-' << e.v;
    }
    os << ']';
    return os.str();
}

}  // namespace bispan
