#include "bispan/ordering.hpp"

#include <sstream>
#include <unordered_set>

#include "bispan/exchange.hpp"

namespace bispan {

std::vector<EdgeId> SwapSequence::edge_order() const {
    std::vector<EdgeId> s, t;
    EdgeSet cur = start.S;
    for (const Swap& sw : swaps) {
        bool ein = cur.contains(sw.e), fin = cur.contains(sw.f);
        if (ein == fin) return {};
        EdgeId out = ein ? sw.e : sw.f;
        EdgeId in = ein ? sw.f : sw.e;
        s.push_back(out);
        t.push_back(in);
        cur.erase(out);
        cur.insert(in);
    }
    s.insert(s.end(), t.begin(), t.end());
    return s;
}

namespace {

struct Cbo {
    std::vector<EdgeId> s, t;
};

// G - v with vertices above v shifted down
std::vector<Vertex> drop_vertex_map(int n, Vertex v) {
    std::vector<Vertex> map(n);
    for (Vertex w = 0; w < n; ++w) map[w] = w < v ? w : (w == v ? -1 : w - 1);
    return map;
}

Cbo cbo_rec(const MultiGraph& g, const EdgeSet& S, const EdgeSet& T) {
    if (g.n() == 1) return {};
    if (g.n() == 2) return {{S.first()}, {T.first()}};

    Vertex v = -1;
    for (Vertex w = 0; w < g.n() && v < 0; ++w)
        if (g.degree(w) == 2) v = w;
    for (Vertex w = 0; w < g.n() && v < 0; ++w)
        if (g.degree(w) == 3) v = w;
    if (v < 0) throw InternalError("bispanning graph without a vertex of degree 2 or 3");

    auto map = drop_vertex_map(g.n(), v);
    std::vector<EdgeId> inS, inT;
    for (auto [w, id] : g.incident(v)) (S.contains(id) ? inS : inT).push_back(id);

    if (g.degree(v) == 2) {
        if (inS.size() != 1) throw InternalError("degree-2 vertex is not a leaf of both trees");
        std::vector<Edge> es;
        for (const Edge& e : g.edges())
            if (e.u != v && e.v != v) es.push_back({e.id, map[e.u], map[e.v]});
        MultiGraph h(g.n() - 1, es);
        EdgeSet S2 = S, T2 = T;
        S2.erase(inS[0]);
        T2.erase(inT[0]);
        Cbo r = cbo_rec(h, S2, T2);
        r.s.push_back(inS[0]);
        r.t.push_back(inT[0]);
        return r;
    }

    if (inS.size() == 1) {
        Cbo r = cbo_rec(g, T, S);
        return {r.t, r.s};
    }
    // e_x, e_y in S, e_z in T; the split edge reuses the id of e_x
    EdgeId ex = inS[0], ey = inS[1], ez = inT[0];
    Vertex x = g.other(ex, v), y = g.other(ey, v), z = g.other(ez, v);
    std::vector<Edge> es;
    for (const Edge& e : g.edges())
        if (e.u != v && e.v != v) es.push_back({e.id, map[e.u], map[e.v]});
    es.push_back({ex, map[x], map[y]});
    MultiGraph h(g.n() - 1, es);
    EdgeSet S2 = S, T2 = T;
    S2.erase(ey);
    T2.erase(ez);
    Cbo r = cbo_rec(h, S2, T2);

    int m1 = static_cast<int>(r.s.size());
    int i = 0;
    while (i < m1 && r.s[i] != ex) ++i;
    if (i == m1) throw InternalError("split edge missing from the reduced ordering");

    // R = s'_{i+1..} and t'_{..i-1}: a spanning tree of G' minus the split edge
    UnionFind uf(h.n());
    for (int k = i + 1; k < m1; ++k) {
        const Edge& e = h.edge(r.s[k]);
        uf.unite(e.u, e.v);
    }
    for (int k = 0; k < i; ++k) {
        const Edge& e = h.edge(r.t[k]);
        uf.unite(e.u, e.v);
    }
    // the second one is the edge not on the cycle that e_z closes
    bool x_with_z = uf.same(map[x], map[z]);
    EdgeId first = x_with_z ? ex : ey;
    EdgeId second = x_with_z ? ey : ex;

    Cbo out;
    out.s.assign(r.s.begin(), r.s.begin() + i);
    out.s.push_back(first);
    out.s.push_back(second);
    out.s.insert(out.s.end(), r.s.begin() + i + 1, r.s.end());
    out.t.assign(r.t.begin(), r.t.begin() + i);
    out.t.push_back(ez);
    out.t.insert(out.t.end(), r.t.begin() + i, r.t.end());
    return out;
}

SwapSequence from_order(const TreePair& tp, const Cbo& c) {
    SwapSequence seq{tp, {}};
    for (std::size_t k = 0; k < c.s.size(); ++k) seq.swaps.push_back({c.s[k], c.t[k]});
    return seq;
}

}  // namespace

SwapSequence build_cbo(const TreePair& tp) {
    tp.check();
    return from_order(tp, cbo_rec(tp.g, tp.S, tp.T));
}

bool verify_cbo(const SwapSequence& seq) {
    const MultiGraph& g = seq.host();
    int m = g.m() / 2;
    if (seq.length() != m)
        throw Error(ErrorKind::LengthMismatch,
                    "sequence has " + std::to_string(seq.length()) + " swaps, expected " + std::to_string(m));
    auto order = seq.edge_order();
    if (order.empty() && m > 0) return false;
    EdgeSet seen, first;
    for (int k = 0; k < 2 * m; ++k) {
        if (!g.has_edge(order[k]) || seen.contains(order[k])) return false;
        seen.insert(order[k]);
        if (k < m) first.insert(order[k]);
    }
    if (seen != g.edge_set() || first != seq.start.S) return false;
    for (int k = 0; k < 2 * m; ++k) {
        EdgeSet w;
        for (int j = 0; j < m; ++j) w.insert(order[(k + j) % (2 * m)]);
        if (!is_spanning_tree(g, w)) return false;
    }
    return true;
}

namespace {

struct UecboSearch {
    const MultiGraph& g;
    EdgeSet S0, T0;
    std::unordered_set<EdgeSet, EdgeSetHash> dead;
    std::vector<Swap> path;

    bool dfs(const EdgeSet& S) {
        if (S == T0) return true;
        if (dead.count(S)) return false;
        EdgeSet T = g.edge_set().minus(S);
        PairOracle oracle(g, S, T);
        // S exchanges: an edge of S0 leaves for an edge of T0
        for (EdgeId e : (S & S0).ids()) {
            EdgeId f = oracle.unique(e);
            if (f < 0 || !T0.contains(f)) continue;
            EdgeSet next = S;
            next.erase(e);
            next.insert(f);
            path.push_back({e, f});
            if (dfs(next)) return true;
            path.pop_back();
        }
        // T exchanges: e in T0 enters S, its partner f in S0 leaves
        for (EdgeId e : (T & T0).ids()) {
            EdgeId f = oracle.unique(e);
            if (f < 0 || !S0.contains(f)) continue;
            EdgeSet next = S;
            next.erase(f);
            next.insert(e);
            path.push_back({e, f});
            if (dfs(next)) return true;
            path.pop_back();
        }
        dead.insert(S);
        return false;
    }
};

}  // namespace

std::optional<SwapSequence> find_uecbo(const TreePair& tp) {
    tp.check();
    if (tp.g.m() / 2 > kMaxUecboHalf)
        throw Error(ErrorKind::TooLarge, "find_uecbo supports |E|/2 <= " + std::to_string(kMaxUecboHalf));
    UecboSearch search{tp.g, tp.S, tp.T, {}, {}};
    if (!search.dfs(tp.S)) return std::nullopt;
    return SwapSequence{tp, search.path};
}

std::optional<std::vector<Swap>> find_forced_path(const TreePair& tp, const EdgeSet& target_S) {
    tp.check();
    const EdgeSet all = tp.g.edge_set();
    if (!target_S.subset_of(all) || !is_spanning_tree(tp.g, target_S) || !is_spanning_tree(tp.g, all.minus(target_S)))
        throw Error(ErrorKind::NotATree, "target is not a tree pair");
    if ((tp.S.minus(target_S)).size() > kMaxUecboHalf)
        throw Error(ErrorKind::TooLarge, "find_forced_path supports at most " + std::to_string(kMaxUecboHalf) + " swaps");
    // edges of S outside the target play the role of the start tree
    UecboSearch search{tp.g, all.minus(target_S), target_S, {}, {}};
    if (!search.dfs(tp.S)) return std::nullopt;
    return search.path;
}

bool verify_uecbo(const SwapSequence& seq) {
    const MultiGraph& g = seq.host();
    if (!seq.start.valid()) return false;
    TreePair cur = seq.start;
    for (const Swap& sw : seq.swaps) {
        if (!g.has_edge(sw.e) || !g.has_edge(sw.f) || sw.e == sw.f) return false;
        auto u = unique_exchange(cur, sw.e);
        if (!u || *u != sw.f) return false;
        bool e_in_S = cur.S.contains(sw.e);
        // the swapped edges must come from the start trees in the forward direction
        EdgeId out_of_S = e_in_S ? sw.e : sw.f;
        if (!seq.start.S.contains(out_of_S)) return false;
        cur.S.flip(sw.e);
        cur.S.flip(sw.f);
        cur.T.flip(sw.e);
        cur.T.flip(sw.f);
    }
    return cur.S == seq.start.T;
}

SwapSequence reverse_uecbo(const SwapSequence& seq) {
    if (!verify_uecbo(seq)) throw Error(ErrorKind::InvalidInput, "not a unique exchange cyclic base ordering");
    SwapSequence r{seq.start, {}};
    for (auto it = seq.swaps.rbegin(); it != seq.swaps.rend(); ++it) r.swaps.push_back({it->f, it->e});
    return r;
}

namespace {

int seam_index(const SwapSequence& seq, EdgeId d) {
    for (int k = 0; k < seq.length(); ++k)
        if (seq.swaps[k].e == d || seq.swaps[k].f == d) return k;
    throw Error(ErrorKind::SeamMismatch, "join edge " + std::to_string(d) + " is never swapped");
}

void check_schedule(const std::string& s, int na, int nb, const char* what) {
    int ca = 0, cb = 0;
    for (char c : s) {
        if (c == 'a') ++ca;
        else if (c == 'b') ++cb;
        else throw Error(ErrorKind::InvalidInput, std::string(what) + " schedule takes only 'a' and 'b'");
    }
    if (ca != na || cb != nb)
        throw Error(ErrorKind::InvalidInput, std::string(what) + " schedule needs " + std::to_string(na) + " a and " +
                                                 std::to_string(nb) + " b");
}

}  // namespace

SwapSequence join_uecbo_2sum(const SwapSequence& a, const SwapSequence& b0, EdgeId d1, EdgeId d2,
                             const JoinSchedule& schedule, int orientation) {
    if (!a.host().has_edge(d1) || !b0.host().has_edge(d2))
        throw Error(ErrorKind::NoSuchEdge, "join edge missing from its graph");
    if (!verify_uecbo(a) || !verify_uecbo(b0))
        throw Error(ErrorKind::InvalidInput, "both inputs must be unique exchange cyclic base orderings");
    if (a.start.S.contains(d1) == b0.start.S.contains(d2))
        throw Error(ErrorKind::SeamMismatch, "join edges lie in the same tree of their start pairs");

    int i = seam_index(a, d1);
    bool a_left = a.swaps[i].e == d1;
    SwapSequence b = b0;
    int j = seam_index(b, d2);
    if ((b.swaps[j].e == d2) == a_left) {
        b = reverse_uecbo(b);
        j = seam_index(b, d2);
    }

    CliqueSum cs = clique2_sum_mapped(a.host(), d1, b.host(), d2, orientation);
    auto ma = [&](EdgeId e) { return cs.map1[e]; };
    auto mb = [&](EdgeId e) { return cs.map2[e]; };

    Swap fused = a_left ? Swap{mb(b.swaps[j].e), ma(a.swaps[i].f)} : Swap{ma(a.swaps[i].e), mb(b.swaps[j].f)};

    int na = a.length(), nb = b.length();
    std::string before = schedule.before.empty() ? std::string(i, 'a') + std::string(j, 'b') : schedule.before;
    std::string after = schedule.after.empty() ? std::string(na - i - 1, 'a') + std::string(nb - j - 1, 'b')
                                               : schedule.after;
    check_schedule(before, i, j, "before");
    check_schedule(after, na - i - 1, nb - j - 1, "after");

    TreePair start{cs.graph, {}, {}};
    for (EdgeId e : a.start.S.ids())
        if (e != d1) start.S.insert(ma(e));
    for (EdgeId e : b.start.S.ids())
        if (e != d2) start.S.insert(mb(e));
    start.T = cs.graph.edge_set().minus(start.S);

    SwapSequence out{start, {}};
    int pa = 0, pb = 0;
    auto take = [&](char c) {
        const Swap& s = c == 'a' ? a.swaps[pa++] : b.swaps[pb++];
        out.swaps.push_back(c == 'a' ? Swap{ma(s.e), ma(s.f)} : Swap{mb(s.e), mb(s.f)});
    };
    for (char c : before) take(c);
    out.swaps.push_back(fused);
    ++pa;
    ++pb;
    for (char c : after) take(c);
    if (!verify_uecbo(out)) throw InternalError("joined sequence is not a unique exchange cyclic base ordering");
    return out;
}

std::string format_swaps(const std::vector<Swap>& swaps) {
    std::ostringstream os;
    os << "<";
    for (std::size_t k = 0; k < swaps.size(); ++k) os << (k ? ", " : " ") << "(" << swaps[k].e << "," << swaps[k].f << ")";
    os << (swaps.empty() ? ">" : " >");
    return os.str();
}

nlohmann::json to_json(const SwapSequence& seq) {
    nlohmann::json j;
    j["start_S"] = seq.start.S.ids();
    j["swaps"] = nlohmann::json::array();
    for (const Swap& s : seq.swaps) j["swaps"].push_back({s.e, s.f});
    return j;
}

SwapSequence swap_sequence_from_json(const MultiGraph& g, const nlohmann::json& j) {
    try {
        SwapSequence seq{{g, {}, {}}, {}};
        for (EdgeId e : j.at("start_S").get<std::vector<EdgeId>>()) {
            if (!g.has_edge(e)) throw Error(ErrorKind::NoSuchEdge, "edge " + std::to_string(e));
            seq.start.S.insert(e);
        }
        seq.start.T = g.edge_set().minus(seq.start.S);
        for (const auto& p : j.at("swaps")) seq.swaps.push_back({p.at(0).get<EdgeId>(), p.at(1).get<EdgeId>()});
        return seq;
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, ex.what());
    }
}

}  // namespace bispan
