#include "bispan/compose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace bispan {

const char* to_string(ArcClass c) {
    switch (c) {
    case ArcClass::Lifted: return "lifted";
    case ArcClass::Leaf: return "leaf";
    case ArcClass::Forwarded: return "forwarded";
    case ArcClass::Extra: return "extra";
    }
    return "?";
}

namespace {

struct RawArc {
    EdgeId e, f;
    EdgeSet from, to;
    Kind kind;
};

// sorts the vertices and resolves arc ends to indices
ExchangeGraph assemble(const MultiGraph& host, Variant variant, Form form, std::vector<EdgeSet> verts,
                       const std::vector<RawArc>& arcs) {
    ExchangeGraph x;
    x.host = host;
    x.variant = variant;
    x.form = form;
    std::sort(verts.begin(), verts.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); });
    x.vertices = std::move(verts);
    for (int i = 0; i < x.size(); ++i) x.index.emplace(x.vertices[i], i);
    if (static_cast<int>(x.index.size()) != x.size()) throw InternalError("duplicate vertex while assembling");
    x.out_degree.assign(x.size(), 0);
    for (const RawArc& a : arcs) {
        int u = x.find(a.from), v = x.find(a.to);
        if (u < 0 || v < 0) throw InternalError("arc end outside the vertex set");
        x.arcs.push_back({a.e, a.f, u, v, a.kind});
    }
    return x;
}

Kind kind_at(const EdgeSet& S, EdgeId e) { return S.contains(e) ? Kind::S : Kind::T; }

EdgeSet apply_swap(EdgeSet S, EdgeId e, EdgeId f) {
    S.flip(e);
    S.flip(f);
    return S;
}

EdgeSet remap(const EdgeSet& s, const std::vector<EdgeId>& map) {
    EdgeSet out;
    s.for_each([&](EdgeId e) {
        if (map[e] >= 0) out.insert(map[e]);
    });
    return out;
}

using ArcKey = std::tuple<int, EdgeId, EdgeId, int>;  // from, e, f, kind

std::map<ArcKey, int> arc_index(const ExchangeGraph& x) {
    std::map<ArcKey, int> idx;
    for (int i = 0; i < static_cast<int>(x.arcs.size()); ++i) {
        const ExchangeArc& a = x.arcs[i];
        idx.emplace(ArcKey{a.from, a.e, a.f, static_cast<int>(a.kind)}, i);
    }
    return idx;
}

void require_directed_tau3(const ExchangeGraph& x, const char* what) {
    if (x.form != Form::Directed || x.variant != Variant::Tau3)
        throw Error(ErrorKind::FormMismatch, std::string(what) + " needs a directed τ3");
}

// vertex map through flattened keys, then arc map through (from, e, f, kind)
TauIsomorphism match_graphs(const std::string& theorem, const ExchangeGraph& direct, const ExchangeGraph& composed,
                            const std::vector<int>& vmap) {
    TauIsomorphism iso;
    iso.theorem = theorem;
    iso.vertices = direct.size();
    iso.arcs = static_cast<int>(direct.arcs.size());
    if (direct.size() != composed.size())
        throw Error(ErrorKind::IsoCheckFailed, theorem + ": vertex counts " + std::to_string(direct.size()) + " vs " +
                                                   std::to_string(composed.size()));
    if (direct.arcs.size() != composed.arcs.size())
        throw Error(ErrorKind::IsoCheckFailed, theorem + ": arc counts " + std::to_string(direct.arcs.size()) + " vs " +
                                                   std::to_string(composed.arcs.size()));
    std::vector<char> hit(composed.size(), 0);
    for (int i = 0; i < direct.size(); ++i) {
        int j = vmap[i];
        if (j < 0 || hit[j]) throw Error(ErrorKind::IsoCheckFailed, theorem + ": vertex map is not a bijection");
        hit[j] = 1;
    }
    iso.vertex_map = vmap;
    auto idx = arc_index(composed);
    std::vector<char> used(composed.arcs.size(), 0);
    for (const ExchangeArc& a : direct.arcs) {
        auto it = idx.find(ArcKey{vmap[a.from], a.e, a.f, static_cast<int>(a.kind)});
        if (it == idx.end() || used[it->second] || composed.arcs[it->second].to != vmap[a.to])
            throw Error(ErrorKind::IsoCheckFailed, theorem + ": arc (" + std::to_string(a.e) + "," +
                                                       std::to_string(a.f) + ") has no image");
        used[it->second] = 1;
        iso.arc_map.push_back(it->second);
    }
    return iso;
}

}  // namespace

ExchangeGraph cartesian_product(const ExchangeGraph& a, const ExchangeGraph& b0) {
    if (a.form != b0.form || a.form == Form::Simple)
        throw Error(ErrorKind::FormMismatch, "product needs two directed or two undirected exchange graphs");
    if (a.variant != b0.variant) throw Error(ErrorKind::FormMismatch, "product needs the same variant on both sides");

    // shift the ids of b if they collide with a
    std::vector<EdgeId> shift(b0.host.id_bound(), -1);
    bool overlap = !(a.host.edge_set() & b0.host.edge_set()).empty();
    int off = overlap ? a.host.id_bound() : 0;
    for (const Edge& e : b0.host.edges()) shift[e.id] = e.id + off;
    if (off + b0.host.id_bound() > kMaxEdgeId) throw Error(ErrorKind::TooLarge, "product host exceeds the edge id range");

    // one-point union at vertex 0
    std::vector<Edge> es = a.host.edges();
    int na = a.host.n();
    auto vb = [&](Vertex w) { return w == 0 ? 0 : w + na - 1; };
    for (const Edge& e : b0.host.edges()) es.push_back({shift[e.id], vb(e.u), vb(e.v)});
    MultiGraph host(na + b0.host.n() - 1, es);

    std::vector<EdgeSet> bverts;
    for (const EdgeSet& s : b0.vertices) bverts.push_back(remap(s, shift));

    std::vector<EdgeSet> verts;
    for (const EdgeSet& sa : a.vertices)
        for (const EdgeSet& sb : bverts) verts.push_back(sa | sb);
    std::vector<RawArc> arcs;
    for (const ExchangeArc& x : a.arcs)
        for (const EdgeSet& sb : bverts)
            arcs.push_back({x.e, x.f, a.vertices[x.from] | sb, a.vertices[x.to] | sb, x.kind});
    for (const ExchangeArc& y : b0.arcs)
        for (const EdgeSet& sa : a.vertices)
            arcs.push_back({shift[y.e], shift[y.f], sa | bverts[y.from], sa | bverts[y.to], y.kind});

    ExchangeGraph out = assemble(host, a.variant, a.form, std::move(verts), arcs);
    // degrees add up in a product
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b0.size(); ++j) out.out_degree[out.find(a.vertices[i] | bverts[j])] = a.out_degree[i] + b0.out_degree[j];
    return out;
}

TauIsomorphism verify_composite_decomposition(const MultiGraph& g, const std::vector<Vertex>& sub) {
    std::vector<Vertex> vs = sub;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (Vertex v : vs)
        if (v < 0 || v >= g.n()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    if (vs.size() < 2 || static_cast<int>(vs.size()) >= g.n())
        throw Error(ErrorKind::NotBispanningSubgraph, "subgraph must have between 2 and n-1 vertices");
    MultiGraph inner = induced(g, vs);
    if (!find_two_trees(inner)) throw Error(ErrorKind::NotBispanningSubgraph, "induced subgraph is not bispanning");
    MultiGraph outer = contract(g, vs).graph;

    ExchangeGraph direct = build_tau(g, Variant::Tau3, Form::Directed);
    ExchangeGraph ta = build_tau(inner, Variant::Tau3, Form::Directed);
    ExchangeGraph tb = build_tau(outer, Variant::Tau3, Form::Directed);
    ExchangeGraph prod = cartesian_product(ta, tb);

    // φ_v: (S ∩ E', S ∩ Ē), then ψ_v back into the product's key space
    EdgeSet ein = inner.edge_set(), eout = outer.edge_set();
    std::vector<int> vmap(direct.size(), -1);
    for (int i = 0; i < direct.size(); ++i) {
        const EdgeSet& S = direct.vertices[i];
        int ia = ta.find(S & ein), ib = tb.find(S & eout);
        if (ia < 0 || ib < 0)
            throw Error(ErrorKind::IsoCheckFailed, "a tree pair does not restrict to tree pairs of the parts");
        vmap[i] = prod.find(ta.vertices[ia] | tb.vertices[ib]);
    }
    // φ_e sends an arc into the part holding e; check it is there before the full match
    for (const ExchangeArc& a : direct.arcs) {
        const EdgeSet& S = direct.vertices[a.from];
        bool inside = ein.contains(a.e);
        if (inside != ein.contains(a.f))
            throw Error(ErrorKind::IsoCheckFailed, "an exchange crosses the bispanning subgraph");
        const ExchangeGraph& part = inside ? ta : tb;
        int p = part.find(S & (inside ? ein : eout));
        bool found = false;
        for (const ExchangeArc& b : part.arcs)
            if (b.from == p && b.e == a.e && b.f == a.f && b.kind == a.kind) found = true;
        if (!found) throw Error(ErrorKind::IsoCheckFailed, "arc missing from the part's exchange graph");
    }
    return match_graphs("composite", direct, prod, vmap);
}

ExchangeGraph eta_join(const ExchangeGraph& t1, const ExchangeGraph& t2, EdgeId d1, EdgeId d2, int orientation) {
    require_directed_tau3(t1, "eta_join");
    require_directed_tau3(t2, "eta_join");
    if (!t1.host.has_edge(d1) || !t2.host.has_edge(d2))
        throw Error(ErrorKind::SeamMismatch, "join edge missing from its graph");
    CliqueSum cs = clique2_sum_mapped(t1.host, d1, t2.host, d2, orientation);
    auto flat = [&](int i1, int i2) { return remap(t1.vertices[i1], cs.map1) | remap(t2.vertices[i2], cs.map2); };
    auto joinable = [&](int i1, int i2) { return t1.vertices[i1].contains(d1) != t2.vertices[i2].contains(d2); };

    std::vector<EdgeSet> verts;
    for (int i1 = 0; i1 < t1.size(); ++i1)
        for (int i2 = 0; i2 < t2.size(); ++i2)
            if (joinable(i1, i2)) verts.push_back(flat(i1, i2));

    auto a1 = t1.out_arcs();
    auto a2 = t2.out_arcs();
    std::vector<RawArc> arcs;
    for (int i1 = 0; i1 < t1.size(); ++i1) {
        for (int i2 = 0; i2 < t2.size(); ++i2) {
            if (!joinable(i1, i2)) continue;
            EdgeSet from = flat(i1, i2);
            // (a): inside G1, away from the seam
            for (int k : a1[i1]) {
                const ExchangeArc& x = t1.arcs[k];
                if (x.e == d1 || x.f == d1) continue;
                arcs.push_back({cs.map1[x.e], cs.map1[x.f], from, flat(x.to, i2), x.kind});
            }
            // (b): inside G2
            for (int k : a2[i2]) {
                const ExchangeArc& y = t2.arcs[k];
                if (y.e == d2 || y.f == d2) continue;
                arcs.push_back({cs.map2[y.e], cs.map2[y.f], from, flat(i1, y.to), y.kind});
            }
            // (c): (e,d1) in G1 chained with (d2,f) in G2
            for (int k : a1[i1]) {
                const ExchangeArc& x = t1.arcs[k];
                if (x.f != d1) continue;
                for (int l : a2[i2]) {
                    const ExchangeArc& y = t2.arcs[l];
                    if (y.e != d2) continue;
                    arcs.push_back({cs.map1[x.e], cs.map2[y.f], from, flat(x.to, y.to), x.kind});
                }
            }
            // (d): (e,d2) in G2 chained with (d1,f) in G1
            for (int l : a2[i2]) {
                const ExchangeArc& y = t2.arcs[l];
                if (y.f != d2) continue;
                for (int k : a1[i1]) {
                    const ExchangeArc& x = t1.arcs[k];
                    if (x.e != d1) continue;
                    arcs.push_back({cs.map2[y.e], cs.map1[x.f], from, flat(x.to, y.to), y.kind});
                }
            }
        }
    }
    ExchangeGraph out = assemble(cs.graph, Variant::Tau3, Form::Directed, std::move(verts), arcs);
    for (const ExchangeArc& a : out.arcs) ++out.out_degree[a.from];
    return out;
}

TauIsomorphism verify_eta_join(const MultiGraph& g1, EdgeId d1, const MultiGraph& g2, EdgeId d2, int orientation) {
    MultiGraph g = clique2_sum(g1, d1, g2, d2, orientation);
    ExchangeGraph direct = build_tau(g, Variant::Tau3, Form::Directed);
    ExchangeGraph joined = eta_join(build_tau(g1, Variant::Tau3, Form::Directed),
                                    build_tau(g2, Variant::Tau3, Form::Directed), d1, d2, orientation);
    std::vector<int> vmap(direct.size());
    for (int i = 0; i < direct.size(); ++i) vmap[i] = joined.find(direct.vertices[i]);
    return match_graphs("2-clique sum", direct, joined, vmap);
}

namespace {

struct Deg3Context {
    Deg3Reduction red;
    std::array<EdgeId, 3> inc;
};

// ρ_{e_ab,c}: e_ab carries the id of e_b, so only e_a and e_c need placing
EdgeSet lift_pair(const Deg3Context& cx, int k, const EdgeSet& S) {
    const auto& r = cx.red.roles[k];
    EdgeSet out = S;
    if (S.contains(cx.red.split[k])) out.insert(cx.inc[r[0]]);
    else out.insert(cx.inc[r[2]]);
    return out;
}

}  // namespace

Deg3Composition compose_deg3_detailed(const MultiGraph& g, Vertex v, const std::array<const ExchangeGraph*, 3>& parts) {
    Deg3Context cx{reduce_deg3(g, v), {}};
    cx.inc = cx.red.inc;
    for (int k = 0; k < 3; ++k) {
        require_directed_tau3(*parts[k], "compose_deg3");
        if (parts[k]->host.edge_set() != cx.red.graphs[k].edge_set())
            throw Error(ErrorKind::InvalidInput, "input " + std::to_string(k) + " is not τ3 of the matching reduction graph");
    }
    EdgeSet all = g.edge_set();

    Deg3Composition out;
    std::vector<EdgeSet> verts;
    std::vector<RawArc> arcs;
    std::vector<ArcClass> classes;

    for (int k = 0; k < 3; ++k) {
        const ExchangeGraph& t = *parts[k];
        const MultiGraph& gr = cx.red.graphs[k];
        auto [ia, ib, ic] = cx.red.roles[k];
        EdgeId ea = cx.inc[ia], eb = cx.inc[ib], ec = cx.inc[ic];
        EdgeId eab = cx.red.split[k];
        for (int i = 0; i < t.size(); ++i) {
            EdgeSet Sg = lift_pair(cx, k, t.vertices[i]);
            verts.push_back(Sg);
        }
        for (const ExchangeArc& x : t.arcs) {
            const EdgeSet& Sr = t.vertices[x.from];
            EdgeSet Sg = lift_pair(cx, k, Sr);
            EdgeSet Tg = all.minus(Sg);
            if (x.e == eab) {
                out.broken.push_back({k, Sr, x.e, x.f, "leaves the split edge"});
                continue;
            }
            if (x.f == eab) {
                // forwarded to whichever of e_a, e_b the cut of f in G picks up
                const EdgeSet& tree_f = Sg.contains(x.e) ? Sg : Tg;
                EdgeSet cut = fundamental_cut(g, tree_f, x.e);
                bool ina = cut.contains(ea), inb = cut.contains(eb);
                if (ina == inb) throw Error(ErrorKind::CompositionMismatch, "forwarded target is not determined by the cut");
                EdgeId e2 = ina ? ea : eb;
                EdgeSet to = apply_swap(Sg, x.e, e2);
                arcs.push_back({x.e, e2, Sg, to, kind_at(Sg, x.e)});
                classes.push_back(ArcClass::Forwarded);
                arcs.push_back({e2, x.e, to, Sg, kind_at(to, e2)});
                classes.push_back(ArcClass::Forwarded);
                continue;
            }
            // broken iff e ∈ D_Gab(Y, e_ab) ∩ C_G(Z + e_c, e_a) ∩ C_G(Z + e_c, e_b), Y the tree with e_ab
            EdgeSet Y = Sr.contains(eab) ? Sr : gr.edge_set().minus(Sr);
            EdgeSet Zg = Sg.contains(ec) ? Sg : Tg;
            bool broken = fundamental_cut(gr, Y, eab).contains(x.e) && fundamental_cycle(g, Zg, ea).contains(x.e) &&
                          fundamental_cycle(g, Zg, eb).contains(x.e);
            if (broken) {
                out.broken.push_back({k, Sr, x.e, x.f, "e in D(Y,e_ab) and on both cycles of e_a, e_b"});
                continue;
            }
            arcs.push_back({x.e, x.f, Sg, apply_swap(Sg, x.e, x.f), x.kind});
            classes.push_back(ArcClass::Lifted);
        }
    }

    // leaf and extra exchanges at v, per pair of G
    for (const EdgeSet& Sg : verts) {
        EdgeSet Tg = all.minus(Sg);
        int cnt = 0;
        for (EdgeId e : cx.inc) cnt += Sg.contains(e);
        // the attachment edge is the single-coloured one
        EdgeId ec = -1;
        for (EdgeId e : cx.inc)
            if (Sg.contains(e) == (cnt == 1)) ec = e;
        const EdgeSet& Oc = Sg.contains(ec) ? Tg : Sg;
        EdgeSet cyc = fundamental_cycle(g, Oc, ec);
        EdgeId ea = -1;
        for (EdgeId e : cx.inc)
            if (e != ec && cyc.contains(e)) ea = e;
        if (ea < 0) throw Error(ErrorKind::CompositionMismatch, "no cycle edge at the degree-3 vertex");
        EdgeSet to = apply_swap(Sg, ec, ea);
        arcs.push_back({ec, ea, Sg, to, kind_at(Sg, ec)});
        classes.push_back(ArcClass::Leaf);
        // extra: D(·,e_a) ∩ C(·,e_a) = {e_a, e_c}
        TreePair tp{g, Sg, Tg};
        auto u = unique_exchange(tp, ea);
        if (u && *u == ec) {
            arcs.push_back({ea, ec, Sg, to, kind_at(Sg, ea)});
            classes.push_back(ArcClass::Extra);
        }
    }

    // an arc claimed by two classes would break the classification
    std::set<std::tuple<uint64_t, uint64_t, EdgeId, EdgeId, int>> seen;
    for (const RawArc& a : arcs)
        if (!seen.emplace(a.from.word(0), a.from.word(1), a.e, a.f, static_cast<int>(a.kind)).second)
            throw Error(ErrorKind::CompositionMismatch, "arc (" + std::to_string(a.e) + "," + std::to_string(a.f) +
                                                            ") classified twice");

    out.tau = assemble(g, Variant::Tau3, Form::Directed, std::move(verts), arcs);
    for (const ExchangeArc& a : out.tau.arcs) ++out.tau.out_degree[a.from];
    out.arc_class = std::move(classes);
    out.counts.broken = static_cast<int>(out.broken.size());
    for (ArcClass c : out.arc_class) {
        switch (c) {
        case ArcClass::Lifted: ++out.counts.lifted; break;
        case ArcClass::Leaf: ++out.counts.leaf; break;
        case ArcClass::Forwarded: ++out.counts.forwarded; break;
        case ArcClass::Extra: ++out.counts.extra; break;
        }
    }
    return out;
}

ExchangeGraph compose_deg3(const MultiGraph& g, Vertex v, const ExchangeGraph& t_xy, const ExchangeGraph& t_xz,
                           const ExchangeGraph& t_yz) {
    return compose_deg3_detailed(g, v, {&t_xy, &t_xz, &t_yz}).tau;
}

Deg3Classification deg3_classify(const MultiGraph& g, Vertex v) {
    Deg3Reduction red = reduce_deg3(g, v);
    std::array<ExchangeGraph, 3> parts;
    for (int k = 0; k < 3; ++k) parts[k] = build_tau(red.graphs[k], Variant::Tau3, Form::Directed);
    Deg3Composition comp = compose_deg3_detailed(g, v, {&parts[0], &parts[1], &parts[2]});
    ExchangeGraph direct = build_tau(g, Variant::Tau3, Form::Directed);

    std::vector<int> vmap(direct.size());
    for (int i = 0; i < direct.size(); ++i) vmap[i] = comp.tau.find(direct.vertices[i]);
    TauIsomorphism iso;
    try {
        iso = match_graphs("degree-3 reduction", direct, comp.tau, vmap);
    } catch (const Error& ex) {
        throw Error(ErrorKind::CompositionMismatch, ex.what());
    }
    Deg3Classification out;
    out.tau = std::move(direct);
    out.arc_class.reserve(out.tau.arcs.size());
    for (int j : iso.arc_map) out.arc_class.push_back(comp.arc_class[j]);
    out.broken = std::move(comp.broken);
    out.counts = comp.counts;
    return out;
}

nlohmann::json composition_report(const std::string& theorem, const MultiGraph& g, bool ok, const Deg3Counts& c,
                                  const std::string& detail) {
    nlohmann::json j;
    j["theorem"] = theorem;
    j["graph"] = describe(g);
    j["status"] = ok ? "ok" : "failed";
    j["counts"] = {{"lifted", c.lifted}, {"broken", c.broken}, {"leaf", c.leaf}, {"forwarded", c.forwarded}, {"extra", c.extra}};
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

}  // namespace bispan
