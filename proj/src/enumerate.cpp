#include "bispan/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "bispan/bispanning.hpp"

#ifdef BISPAN_HAVE_OPENMP
#include <omp.h>
#endif

namespace bispan {

const char* to_string(GraphKind k) {
    switch (k) {
    case GraphKind::General: return "general";
    case GraphKind::Simple: return "simple";
    case GraphKind::Atomic: return "atomic";
    }
    return "?";
}

GraphKind parse_graph_kind(const std::string& s) {
    if (s == "general") return GraphKind::General;
    if (s == "simple") return GraphKind::Simple;
    if (s == "atomic") return GraphKind::Atomic;
    throw Error(ErrorKind::Parse, "unknown graph kind '" + s + "'");
}

int parallel_excess(const MultiGraph& g) {
    std::map<std::pair<Vertex, Vertex>, int> mult;
    for (const Edge& e : g.edges()) ++mult[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    int x = 0;
    for (const auto& [k, c] : mult) x += c - 1;
    return x;
}

namespace {

void check_range(int n, GraphKind kind) {
    if (n < 1) throw Error(ErrorKind::InvalidInput, "n must be at least 1");
    int cap = kind == GraphKind::General ? kMaxEnumGeneral : kMaxEnumSimple;
    if (n > cap)
        throw Error(ErrorKind::TooLarge, std::string(to_string(kind)) + " enumeration supports n <= " + std::to_string(cap));
}

MultiGraph attach2(const MultiGraph& g, Vertex x, Vertex y) {
    std::vector<Edge> es = g.edges();
    Vertex v = g.n();
    es.push_back({g.m(), x, v});
    es.push_back({g.m() + 1, y, v});
    return MultiGraph(g.n() + 1, std::move(es));
}

MultiGraph split_attach(const MultiGraph& g, EdgeId splice, Vertex z) {
    std::vector<Edge> es;
    Vertex v = g.n();
    const Edge sp = g.edge(splice);
    for (const Edge& e : g.edges())
        if (e.id != splice) es.push_back(e);
    es.push_back({0, sp.u, v});
    es.push_back({0, sp.v, v});
    es.push_back({0, z, v});
    // ids 0..m in list order
    for (int i = 0; i < static_cast<int>(es.size()); ++i) es[i].id = i;
    return MultiGraph(g.n() + 1, std::move(es));
}

// all children of g; parallel copies of one edge give the same child, so split one per vertex pair
std::vector<MultiGraph> children(const MultiGraph& g) {
    std::vector<MultiGraph> out;
    for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex y = x; y < g.n(); ++y) out.push_back(attach2(g, x, y));
    std::map<std::pair<Vertex, Vertex>, EdgeId> rep;
    for (const Edge& e : g.edges()) rep.emplace(std::pair{std::min(e.u, e.v), std::max(e.u, e.v)}, e.id);
    for (const auto& [k, id] : rep)
        for (Vertex z = 0; z < g.n(); ++z) out.push_back(split_attach(g, id, z));
    return out;
}

using Level = std::unordered_map<CanonicalCode, MultiGraph>;

// an operation lowers the parallel excess by at most one, so a graph with more excess than
// remaining steps cannot end simple
bool keep(const MultiGraph& g, int n, GraphKind kind) {
    if (kind == GraphKind::General) return true;
    return parallel_excess(g) <= n - g.n();
}

Level next_level(const Level& cur, int n, GraphKind kind, bool parallel) {
    std::vector<const MultiGraph*> parents;
    parents.reserve(cur.size());
    for (const auto& [code, g] : cur) parents.push_back(&g);
    Level next;
    if (!parallel) {
        for (const MultiGraph* p : parents)
            for (MultiGraph& c : children(*p))
                if (keep(c, n, kind)) next.try_emplace(canonical_code(c), std::move(c));
        return next;
    }
#ifdef BISPAN_HAVE_OPENMP
#pragma omp parallel
    {
        Level local;
#pragma omp for schedule(dynamic, 4) nowait
        for (long i = 0; i < static_cast<long>(parents.size()); ++i)
            for (MultiGraph& c : children(*parents[i]))
                if (keep(c, n, kind)) local.try_emplace(canonical_code(c), std::move(c));
#pragma omp critical
        for (auto& [code, g] : local) next.try_emplace(code, std::move(g));
    }
#else
    for (const MultiGraph* p : parents)
        for (MultiGraph& c : children(*p))
            if (keep(c, n, kind)) next.try_emplace(canonical_code(c), std::move(c));
#endif
    return next;
}

std::vector<EnumeratedGraph> run(int n, GraphKind kind, bool parallel) {
    check_range(n, kind);
    Level level;
    MultiGraph k1(1, {});
    level.emplace(canonical_code(k1), k1);
    for (int size = 1; size < n; ++size) level = next_level(level, n, kind, parallel);

    std::vector<EnumeratedGraph> out;
    for (auto& [code, g] : level) {
        if (kind != GraphKind::General && !g.is_simple()) continue;
        if (kind == GraphKind::Atomic && !is_atomic_fast(g)) continue;
        out.push_back({code, std::move(g)});
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedGraph& a, const EnumeratedGraph& b) { return a.code < b.code; });
    return out;
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_bispanning_graphs(int n, GraphKind kind) { return run(n, kind, true); }

std::vector<EnumeratedGraph> enumerate_bispanning_graphs_serial(int n, GraphKind kind) { return run(n, kind, false); }

std::vector<CanonicalCode> enumerate_bispanning(int n, GraphKind kind) {
    std::vector<CanonicalCode> out;
    for (EnumeratedGraph& e : enumerate_bispanning_graphs(n, kind)) out.push_back(std::move(e.code));
    return out;
}

std::size_t count_bispanning(int n, GraphKind kind) { return enumerate_bispanning_graphs(n, kind).size(); }

}  // namespace bispan
