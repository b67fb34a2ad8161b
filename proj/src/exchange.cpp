#include "bispan/exchange.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#ifdef BISPAN_HAVE_OPENMP
#include <omp.h>
#endif

namespace bispan {

const char* to_string(Kind k) { return k == Kind::S ? "S" : "T"; }

const char* to_string(Variant v) {
    switch (v) {
    case Variant::Tau2: return "tau2";
    case Variant::Tau3: return "tau3";
    case Variant::Tau4: return "tau4";
    }
    return "?";
}

const char* to_string(Form f) {
    switch (f) {
    case Form::Directed: return "directed";
    case Form::Undirected: return "undirected";
    case Form::Simple: return "simple";
    }
    return "?";
}

PairOracle::PairOracle(const MultiGraph& g, const EdgeSet& S, const EdgeSet& T) : g_(g), S_(S), T_(T) {
    root(S_, rs_);
    root(T_, rt_);
}

void PairOracle::root(const EdgeSet& t, Rooted& r) const {
    int n = g_.n();
    r.parent.assign(n, -1);
    r.pedge.assign(n, -1);
    r.depth.assign(n, 0);
    r.tin.assign(n, -1);
    r.tout.assign(n, -1);
    r.child_of.assign(g_.id_bound(), -1);
    int clock = 0;
    // iterative DFS with an explicit iterator per vertex
    std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
    r.tin[0] = clock++;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        const auto& inc = g_.incident(v);
        if (i == inc.size()) {
            r.tout[v] = clock - 1;
            stack.pop_back();
            continue;
        }
        auto [w, id] = inc[i++];
        if (!t.contains(id) || id == r.pedge[v]) continue;
        if (r.tin[w] >= 0) throw InternalError("PairOracle: tree edge set contains a cycle");
        r.parent[w] = v;
        r.pedge[w] = id;
        r.depth[w] = r.depth[v] + 1;
        r.child_of[id] = w;
        r.tin[w] = clock++;
        stack.push_back({w, 0});
    }
    if (clock != n) throw InternalError("PairOracle: tree does not span");
}

EdgeSet PairOracle::candidates(EdgeId e) const {
    bool in_s = S_.contains(e);
    const Rooted& x = in_s ? rs_ : rt_;
    const Rooted& y = in_s ? rt_ : rs_;
    Vertex c = x.child_of[e];
    int lo = x.tin[c], hi = x.tout[c];
    auto inside = [&](Vertex w) { return x.tin[w] >= lo && x.tin[w] <= hi; };
    const Edge& ed = g_.edge(e);
    EdgeSet out;
    Vertex a = ed.u, b = ed.v;
    auto take = [&](Vertex w) {
        EdgeId f = y.pedge[w];
        const Edge& fd = g_.edge(f);
        if (inside(fd.u) != inside(fd.v)) out.insert(f);
    };
    while (y.depth[a] > y.depth[b]) {
        take(a);
        a = y.parent[a];
    }
    while (y.depth[b] > y.depth[a]) {
        take(b);
        b = y.parent[b];
    }
    while (a != b) {
        take(a);
        take(b);
        a = y.parent[a];
        b = y.parent[b];
    }
    return out;
}

EdgeId PairOracle::unique(EdgeId e) const {
    EdgeSet c = candidates(e);
    return c.size() == 1 ? c.first() : -1;
}

EdgeSet exchange_candidates(const TreePair& tp, EdgeId e) {
    if (!tp.g.has_edge(e)) throw Error(ErrorKind::NoSuchEdge, "edge id " + std::to_string(e));
    tp.check();
    bool in_s = tp.S.contains(e);
    const EdgeSet& X = in_s ? tp.S : tp.T;
    const EdgeSet& Y = in_s ? tp.T : tp.S;
    // written with the plain cycle/cut routines; PairOracle is the fast path
    EdgeSet d = fundamental_cut(tp.g, X, e);
    EdgeSet c = fundamental_cycle(tp.g, Y, e);
    EdgeSet out = d & c;
    out.erase(e);
    return out;
}

std::optional<EdgeId> unique_exchange(const TreePair& tp, EdgeId e) {
    EdgeSet c = exchange_candidates(tp, e);
    if (c.size() != 1) return std::nullopt;
    return c.first();
}

TreePair apply_exchange(const TreePair& tp, EdgeId e, EdgeId f) {
    bool s_to_t = tp.S.contains(e) && tp.T.contains(f);
    bool t_to_s = tp.T.contains(e) && tp.S.contains(f);
    if (!s_to_t && !t_to_s) throw Error(ErrorKind::InvalidExchange, "edges must lie in opposite trees");
    TreePair out = tp;
    out.S.flip(e);
    out.S.flip(f);
    out.T.flip(e);
    out.T.flip(f);
    if (!is_spanning_tree(tp.g, out.S) || !is_spanning_tree(tp.g, out.T))
        throw Error(ErrorKind::InvalidExchange, "exchange (" + std::to_string(e) + "," + std::to_string(f) + ") breaks a tree");
    return out;
}

int ExchangeGraph::find(const EdgeSet& S) const {
    auto it = index.find(S);
    return it == index.end() ? -1 : it->second;
}

std::vector<std::vector<int>> ExchangeGraph::out_arcs() const {
    std::vector<std::vector<int>> out(vertices.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) out[arcs[i].from].push_back(static_cast<int>(i));
    return out;
}

namespace {

void sort_lex(std::vector<EdgeSet>& v) {
    std::sort(v.begin(), v.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); });
}

EdgeSet seed_pair(const MultiGraph& g) {
    auto tp = find_two_trees(g);
    if (!tp) throw Error(ErrorKind::NotBispanning, "graph is not bispanning");
    return tp->S;
}

// all S' reachable from S by one symmetric exchange
void tau2_neighbors(const MultiGraph& g, const EdgeSet& S, std::vector<EdgeSet>& out) {
    EdgeSet T = g.edge_set().minus(S);
    PairOracle o(g, S, T);
    S.for_each([&](EdgeId e) {
        o.candidates(e).for_each([&](EdgeId f) {
            EdgeSet n = S;
            n.erase(e);
            n.insert(f);
            out.push_back(n);
        });
    });
}

std::vector<EdgeSet> discover(const MultiGraph& g, bool parallel) {
    EdgeSet seed = seed_pair(g);
    std::unordered_set<EdgeSet, EdgeSetHash> seen{seed};
    std::vector<EdgeSet> all{seed};
    std::vector<EdgeSet> frontier{seed};
    while (!frontier.empty()) {
        std::vector<std::vector<EdgeSet>> found(frontier.size());
        long long count = static_cast<long long>(frontier.size());
        // each frontier pair expands independently; merging into seen is serial
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
        for (long long i = 0; i < count; ++i) tau2_neighbors(g, frontier[i], found[i]);
        std::vector<EdgeSet> next;
        for (auto& list : found)
            for (const EdgeSet& s : list)
                if (seen.insert(s).second) {
                    next.push_back(s);
                    all.push_back(s);
                }
        if (all.size() > kMaxPairs) throw Error(ErrorKind::TooLarge, "more than " + std::to_string(kMaxPairs) + " tree pairs");
        frontier.swap(next);
    }
    sort_lex(all);
    return all;
}

void arcs_at(const MultiGraph& g, const EdgeSet& S, Variant variant, std::vector<ExchangeArc>& out) {
    EdgeSet T = g.edge_set().minus(S);
    PairOracle o(g, S, T);
    for (const Edge& ed : g.edges()) {
        EdgeId e = ed.id;
        Kind kind = S.contains(e) ? Kind::S : Kind::T;
        if (variant == Variant::Tau4 && kind == Kind::T) continue;
        EdgeSet c = o.candidates(e);
        if (variant == Variant::Tau2) {
            c.for_each([&](EdgeId f) { out.push_back({e, f, -1, -1, kind}); });
        } else if (c.size() == 1) {
            out.push_back({e, c.first(), -1, -1, kind});
        }
    }
}

ExchangeGraph build(const MultiGraph& g, Variant variant, Form form, bool parallel) {
    ExchangeGraph x;
    x.host = g;
    x.variant = variant;
    x.form = Form::Directed;
    x.vertices = discover(g, parallel);
    x.index.reserve(x.vertices.size() * 2);
    for (std::size_t i = 0; i < x.vertices.size(); ++i) x.index.emplace(x.vertices[i], static_cast<int>(i));
    long long count = static_cast<long long>(x.vertices.size());
    std::vector<std::vector<ExchangeArc>> per(count);
#pragma omp parallel for schedule(dynamic, 32) if (parallel)
    for (long long i = 0; i < count; ++i) {
        arcs_at(g, x.vertices[i], variant, per[i]);
        for (ExchangeArc& a : per[i]) {
            a.from = static_cast<int>(i);
            EdgeSet t = x.vertices[i];
            t.flip(a.e);
            t.flip(a.f);
            a.to = x.find(t);
        }
    }
    std::size_t total = 0;
    for (auto& p : per) total += p.size();
    x.arcs.reserve(total);
    for (auto& p : per)
        for (const ExchangeArc& a : p) {
            if (a.to < 0) throw InternalError("exchange target is not a known tree pair");
            x.arcs.push_back(a);
        }
    x.out_degree.assign(x.vertices.size(), 0);
    for (const ExchangeArc& a : x.arcs) ++x.out_degree[a.from];
    return form == Form::Directed ? x : reform(x, form);
}

}  // namespace

std::vector<EdgeSet> enumerate_tree_pairs(const MultiGraph& g) { return discover(g, true); }
std::vector<EdgeSet> enumerate_tree_pairs_serial(const MultiGraph& g) { return discover(g, false); }

std::vector<EdgeSet> enumerate_tree_pairs_bruteforce(const MultiGraph& g) {
    std::vector<EdgeId> ids = g.edge_set().ids();
    int m = static_cast<int>(ids.size()), k = g.n() - 1;
    std::vector<EdgeSet> out;
    if (k > m) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        EdgeSet s;
        for (int i : idx) s.insert(ids[i]);
        if (is_spanning_tree(g, s) && is_spanning_tree(g, g.edge_set().minus(s))) out.push_back(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    sort_lex(out);
    return out;
}

ExchangeGraph build_tau(const MultiGraph& g, Variant variant, Form form) { return build(g, variant, form, true); }
ExchangeGraph build_tau_serial(const MultiGraph& g, Variant variant, Form form) { return build(g, variant, form, false); }

ExchangeGraph reform(const ExchangeGraph& d, Form form) {
    if (d.form != Form::Directed) throw Error(ErrorKind::FormMismatch, "reform needs a directed exchange graph");
    ExchangeGraph x;
    x.host = d.host;
    x.variant = d.variant;
    x.form = form;
    x.vertices = d.vertices;
    x.index = d.index;
    x.out_degree = d.out_degree;
    if (form == Form::Directed) {
        x.arcs = d.arcs;
    } else if (form == Form::Undirected) {
        // twins run in opposite directions; keep the one leaving the lexicographically smaller pair
        for (const ExchangeArc& a : d.arcs)
            if (a.from < a.to) x.arcs.push_back(a);
    } else {
        std::vector<std::pair<int, int>> links;
        for (const ExchangeArc& a : d.arcs) links.push_back({std::min(a.from, a.to), std::max(a.from, a.to)});
        std::sort(links.begin(), links.end());
        links.erase(std::unique(links.begin(), links.end()), links.end());
        for (auto [u, v] : links) x.arcs.push_back({-1, -1, u, v, Kind::S});
    }
    return x;
}

int tau_components(const ExchangeGraph& x) {
    UnionFind uf(x.size());
    int comps = x.size();
    for (const ExchangeArc& a : x.arcs)
        if (uf.unite(a.from, a.to)) --comps;
    return comps;
}

bool tau_connected(const ExchangeGraph& x) { return tau_components(x) == 1; }

bool tau_strongly_connected(const ExchangeGraph& x) {
    int n = x.size();
    if (n == 0) return false;
    std::vector<std::vector<int>> fwd(n), bwd(n);
    for (const ExchangeArc& a : x.arcs) {
        fwd[a.from].push_back(a.to);
        bwd[a.to].push_back(a.from);
    }
    auto reach_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<int> st{0};
        seen[0] = 1;
        int c = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++c;
                    st.push_back(w);
                }
        }
        return c == n;
    };
    return reach_all(fwd) && reach_all(bwd);
}

TauStats tau_stats(const ExchangeGraph& x) {
    TauStats s;
    s.vertices = x.size();
    s.edges = static_cast<int>(x.arcs.size());
    std::vector<int> deg(x.size(), 0);
    if (x.form == Form::Simple) {
        for (const ExchangeArc& a : x.arcs) {
            ++deg[a.from];
            ++deg[a.to];
        }
    } else if (x.out_degree.size() == deg.size()) {
        // the undirected form keeps half of a twin-symmetric arc set, so report the
        // directed out-degree, which equals the degree once twins are merged
        deg = x.out_degree;
    } else {
        for (const ExchangeArc& a : x.arcs) ++deg[a.from];
    }
    if (!deg.empty()) {
        s.min_degree = *std::min_element(deg.begin(), deg.end());
        s.max_degree = *std::max_element(deg.begin(), deg.end());
    }
    s.components = tau_components(x);
    return s;
}

std::vector<ExchangeArc> leaf_unique_exchanges(const TreePair& tp) {
    const MultiGraph& g = tp.g;
    std::vector<ExchangeArc> out;
    for (int side = 0; side < 2; ++side) {
        const EdgeSet& X = side == 0 ? tp.S : tp.T;
        const EdgeSet& Y = side == 0 ? tp.T : tp.S;
        for (Vertex v = 0; v < g.n(); ++v) {
            EdgeId leaf = -1;
            int deg = 0;
            for (auto [w, id] : g.incident(v))
                if (X.contains(id)) {
                    ++deg;
                    leaf = id;
                }
            if (deg != 1) continue;
            // the Y-path from v to the far end of the leaf edge leaves v by the partner
            EdgeSet c = fundamental_cycle(g, Y, leaf);
            EdgeId f = -1;
            for (auto [w, id] : g.incident(v))
                if (c.contains(id) && id != leaf) f = id;
            if (f < 0) throw InternalError("leaf edge without a partner");
            out.push_back({leaf, f, -1, -1, side == 0 ? Kind::S : Kind::T});
        }
    }
    return out;
}

ExchangeGraph leaf_restricted_tau3(const MultiGraph& g) {
    ExchangeGraph d = build_tau(g, Variant::Tau3, Form::Directed);
    std::vector<char> keep(d.arcs.size(), 0);
    auto out = d.out_arcs();
    long long count = d.size();
#pragma omp parallel for schedule(dynamic, 32)
    for (long long i = 0; i < count; ++i) {
        std::vector<ExchangeArc> leaves = leaf_unique_exchanges(d.pair(static_cast<int>(i)));
        for (int ai : out[i])
            for (const ExchangeArc& l : leaves)
                if (l.e == d.arcs[ai].e && l.f == d.arcs[ai].f) keep[ai] = 1;
    }
    std::vector<ExchangeArc> arcs;
    for (std::size_t i = 0; i < d.arcs.size(); ++i)
        if (keep[i]) arcs.push_back(d.arcs[i]);
    d.arcs.swap(arcs);
    return d;
}

uint64_t count_full_paths(const ExchangeGraph& x, int start, NuConvention conv) {
    if (x.form != Form::Directed) throw Error(ErrorKind::FormMismatch, "path counting needs the directed form");
    if (start < 0 || start >= x.size()) throw Error(ErrorKind::NotATree, "start is not a tree pair of the exchange graph");
    const MultiGraph& g = x.host;
    EdgeSet S0 = x.vertices[start];
    int target = x.find(g.edge_set().minus(S0));
    auto out = x.out_arcs();
    // memo on pair: a forward arc moves an edge that still sits in its starting tree
    std::vector<int64_t> memo(x.size(), -1);
    std::vector<int> order;
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    // iterative post-order DFS
    std::vector<uint64_t> acc(x.size(), 0);
    std::vector<char> onstack(x.size(), 0);
    onstack[start] = 1;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (v == target) {
            memo[v] = 1;
            onstack[v] = 0;
            stack.pop_back();
            if (!stack.empty()) acc[stack.back().first] += 1;
            continue;
        }
        const std::vector<int>& arcs = out[v];
        if (i == arcs.size()) {
            memo[v] = static_cast<int64_t>(acc[v]);
            onstack[v] = 0;
            uint64_t val = acc[v];
            stack.pop_back();
            if (!stack.empty()) acc[stack.back().first] += val;
            continue;
        }
        const ExchangeArc& a = x.arcs[arcs[i++]];
        // forward: e is still in the tree it started in
        bool forward = (S0.contains(a.e) == x.vertices[v].contains(a.e)) && (S0.contains(a.f) == x.vertices[v].contains(a.f));
        if (!forward) continue;
        if (conv == NuConvention::CollapsedParallel && a.kind == Kind::T) {
            // skip a T arc when the S arc for the same transition exists
            bool twin = false;
            for (int bj : arcs) {
                const ExchangeArc& b = x.arcs[bj];
                if (b.kind == Kind::S && b.to == a.to) twin = true;
            }
            if (twin) continue;
        }
        if (memo[a.to] >= 0) {
            acc[v] += static_cast<uint64_t>(memo[a.to]);
            continue;
        }
        if (onstack[a.to]) throw InternalError("forward arcs formed a cycle");
        onstack[a.to] = 1;
        stack.push_back({a.to, 0});
    }
    return static_cast<uint64_t>(memo[start]);
}

NuResult nu(const ExchangeGraph& x, NuConvention conv) {
    if (x.host.m() / 2 > 12) throw Error(ErrorKind::TooLarge, "nu supports |E|/2 <= 12");
    int n = x.size();
    std::vector<uint64_t> counts(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) counts[i] = count_full_paths(x, i, conv);
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (counts[i] < counts[best]) best = i;
    return {counts[best], x.vertices[best]};
}

NuResult nu(const MultiGraph& g, NuConvention conv) {
    if (g.m() / 2 > 12) throw Error(ErrorKind::TooLarge, "nu supports |E|/2 <= 12");
    return nu(build_tau(g, Variant::Tau3, Form::Directed), conv);
}

std::string tau_to_dot(const ExchangeGraph& x) {
    std::ostringstream os;
    bool directed = x.form == Form::Directed;
    os << (directed ? "digraph" : "graph") << " tau {\n";
    for (int i = 0; i < x.size(); ++i) {
        os << "  " << i << " [label=\"";
        bool first = true;
        x.vertices[i].for_each([&](EdgeId e) {
            os << (first ? "" : ",") << e;
            first = false;
        });
        os << "\"];\n";
    }
    const char* link = directed ? " -> " : " -- ";
    if (x.form == Form::Simple) {
        for (const ExchangeArc& a : x.arcs) os << "  " << a.from << link << a.to << ";\n";
    } else {
        // an S arc (e,f) and a T arc (f,e) on the same transition are drawn once as {e,f}
        std::vector<char> done(x.arcs.size(), 0);
        auto out = x.out_arcs();
        for (std::size_t i = 0; i < x.arcs.size(); ++i) {
            if (done[i]) continue;
            const ExchangeArc& a = x.arcs[i];
            int mate = -1;
            for (int j : out[a.from])
                if (!done[j] && j != static_cast<int>(i) && x.arcs[j].to == a.to && x.arcs[j].e == a.f && x.arcs[j].f == a.e) mate = j;
            done[i] = 1;
            if (mate >= 0) {
                done[mate] = 1;
                EdgeId lo = std::min(a.e, a.f), hi = std::max(a.e, a.f);
                os << "  " << a.from << link << a.to << " [label=\"{" << lo << "," << hi << "}\"];\n";
            } else {
                os << "  " << a.from << link << a.to << " [label=\"(" << a.e << "," << a.f << ")\", color="
                   << (a.kind == Kind::S ? "blue" : "red") << "];\n";
            }
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace bispan
