// bispan command-line frontend
#include <csignal>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bispan/catalog.hpp"
#include "bispan/compose.hpp"
#include "bispan/enumerate.hpp"
#include "bispan/exchange.hpp"
#include "bispan/ordering.hpp"
#include "bispan/service.hpp"

using namespace bispan;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitProperty = 2;
constexpr int kExitInternal = 3;

// a file's coloring if it is a tree pair, else one found by the tree-packing algorithm
TreePair load_pair(const std::string& path, bool* given = nullptr) {
    ColoredGraph cg = load_edge_list(path);
    TreePair tp = make_pair_from(cg.graph, cg.colors);
    if (given) *given = tp.valid();
    if (tp.valid()) return tp;
    auto found = find_two_trees(cg.graph);
    if (!found) throw Error(ErrorKind::NotBispanning, "graph has no pair of disjoint spanning trees");
    return *found;
}

std::string ids(const EdgeSet& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (EdgeId e : s.ids()) {
        os << (first ? "" : ",") << e;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string join(const std::vector<EdgeId>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

Variant parse_variant(int v) {
    switch (v) {
    case 2: return Variant::Tau2;
    case 3: return Variant::Tau3;
    case 4: return Variant::Tau4;
    }
    throw Error(ErrorKind::Parse, "variant must be 2, 3 or 4");
}

Form parse_form(const std::string& f) {
    if (f == "d") return Form::Directed;
    if (f == "u") return Form::Undirected;
    if (f == "s") return Form::Simple;
    throw Error(ErrorKind::Parse, "form must be d, u or s");
}

int cmd_check(const std::string& file) {
    ColoredGraph cg = load_edge_list(file);
    const MultiGraph& g = cg.graph;
    std::cout << "n " << g.n() << ", m " << g.m() << "\n";
    auto tp = find_two_trees(g);
    if (!tp) {
        std::cout << "bispanning: no";
        if (g.m() != 2 * g.n() - 2) std::cout << " (needs " << 2 * g.n() - 2 << " edges)";
        std::cout << "\n";
        return kExitProperty;
    }
    std::cout << "bispanning: yes\nS " << ids(tp->S) << "\nT " << ids(tp->T) << "\n";
    return 0;
}

int cmd_trees(const std::string& file) {
    TreePair tp = load_pair(file);
    Coloring c = tp.coloring();
    std::cout << write_edge_list(tp.g, &c);
    return 0;
}

int cmd_classify(const std::string& file) {
    TreePair tp = load_pair(file);
    const MultiGraph& g = tp.g;
    Connectivity c = connectivity_class(g);
    if (is_atomic_fast(g)) {
        std::cout << "atomic";
    } else {
        std::cout << "composite";
        if (auto sub = find_bispanning_subgraph(g)) {
            std::vector<EdgeId> vs(sub->begin(), sub->end());
            std::cout << ", bispanning subgraph on vertices " << join(vs);
        }
    }
    std::cout << "\nsimple " << (g.is_simple() ? "yes" : "no") << "\nconnectivity (" << c.vconn << "," << c.econn
              << ")\n";
    return 0;
}

int cmd_tau(const std::string& file, int variant, const std::string& form, bool dot, bool json) {
    TreePair tp = load_pair(file);
    ExchangeGraph x = build_tau(tp.g, parse_variant(variant), parse_form(form));
    if (dot) {
        std::cout << tau_to_dot(x);
        return 0;
    }
    TauStats st = tau_stats(x);
    bool connected = st.components <= 1;
    if (json) {
        nlohmann::json j = {{"variant", to_string(x.variant)}, {"form", to_string(x.form)}, {"vertices", st.vertices},
                            {"edges", st.edges},   {"min_degree", st.min_degree},  {"max_degree", st.max_degree},
                            {"components", st.components}, {"connected", connected}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << st.vertices << " vertices, " << st.edges << " edges, min-deg " << st.min_degree << ", "
              << (connected ? "connected" : "disconnected") << "\n";
    std::cout << "max-deg " << st.max_degree << ", components " << st.components << "\n";
    return 0;
}

int cmd_nu(const std::string& file, bool at_given) {
    bool given = false;
    TreePair tp = load_pair(file, &given);
    ExchangeGraph x = build_tau(tp.g, Variant::Tau3, Form::Directed);
    if (at_given) {
        if (!given) throw Error(ErrorKind::NotATree, "the file does not color a pair of spanning trees");
        std::cout << "nu " << count_full_paths(x, x.find(tp.S)) << " at S " << ids(tp.S) << "\n";
        return 0;
    }
    NuResult r = nu(x);
    std::cout << "nu " << r.count << " (minimum over pairs, witness S " << ids(r.witness_S) << ")\n";
    return 0;
}

int cmd_cbo(const std::string& file) {
    TreePair tp = load_pair(file);
    SwapSequence seq = build_cbo(tp);
    std::vector<EdgeId> order = seq.edge_order();
    std::size_t h = order.size() / 2;
    std::cout << "order " << join({order.begin(), order.begin() + h}) << " | " << join({order.begin() + h, order.end()})
              << "\n";
    bool ok = verify_cbo(seq);
    std::cout << "windows " << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : kExitInternal;
}

int cmd_uecbo(const std::string& file) {
    TreePair tp = load_pair(file);
    auto seq = find_uecbo(tp);
    if (!seq) {
        std::cout << "no unique exchange ordering from S " << ids(tp.S) << "\n";
        return kExitProperty;
    }
    std::cout << format_swaps(seq->swaps) << "\n";
    bool ok = verify_uecbo(*seq) && verify_uecbo(reverse_uecbo(*seq));
    std::cout << "verified " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : kExitInternal;
}

std::vector<Vertex> parse_vertices(const std::string& s) {
    std::vector<Vertex> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, "bad vertex '" + tok + "'");
        }
    }
    return out;
}

int cmd_verify_compose(const std::string& file, const std::string& sub, bool two_sum, int deg3) {
    TreePair tp = load_pair(file);
    const MultiGraph& g = tp.g;
    std::string mode;
    if (!sub.empty()) mode = "sub";
    else if (two_sum) mode = "2sum";
    else if (deg3 >= 0) mode = "deg3";
    else if (!is_atomic_fast(g)) mode = "sub";
    else if (connectivity(g).vconn == 2) mode = "2sum";
    else mode = "deg3";

    nlohmann::json rep;
    bool ok = true;
    try {
        if (mode == "sub") {
            std::vector<Vertex> vs;
            if (!sub.empty()) vs = parse_vertices(sub);
            else if (auto found = find_bispanning_subgraph(g)) vs = *found;
            else throw Error(ErrorKind::NotBispanningSubgraph, "graph is atomic");
            TauIsomorphism iso = verify_composite_decomposition(g, vs);
            rep = composition_report(iso.theorem, g, true, {}, std::to_string(iso.vertices) + " vertices, " +
                                                                   std::to_string(iso.arcs) + " arcs matched");
        } else if (mode == "2sum") {
            auto parts = decompose_2vconn(g);
            if (!parts) throw Error(ErrorKind::NotApplicable, "graph is not an atomic graph with a 2-vertex cut");
            TauIsomorphism iso = verify_eta_join(parts->g1, parts->d1, parts->g2, parts->d2);
            rep = composition_report(iso.theorem, g, true, {}, std::to_string(iso.vertices) + " vertices, " +
                                                                   std::to_string(iso.arcs) + " arcs matched");
        } else {
            Vertex v = deg3;
            if (v < 0)
                for (Vertex w = 0; w < g.n() && v < 0; ++w)
                    if (g.degree(w) == 3) v = w;
            if (v < 0) throw Error(ErrorKind::WrongDegree, "no vertex of degree three");
            Deg3Classification c = deg3_classify(g, v);
            rep = composition_report("degree-3 reduction", g, true, c.counts, "vertex " + std::to_string(v));
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::IsoCheckFailed && e.kind() != ErrorKind::CompositionMismatch) throw;
        ok = false;
        rep = composition_report(mode, g, false, {}, e.what());
    }
    std::cout << rep.dump(2) << "\n";
    return ok ? 0 : kExitProperty;
}

int cmd_enumerate(int n, const std::string& kind) {
    GraphKind k = parse_graph_kind(kind);
    auto gs = enumerate_bispanning_graphs(n, k);
    int i = 0;
    for (const EnumeratedGraph& e : gs) {
        std::cout << "# " << to_string(k) << " n=" << n << " #" << ++i << "\n" << write_edge_list(e.graph) << "\n";
    }
    std::cout << "count " << gs.size() << "\n";
    return 0;
}

int cmd_named(const std::string& name, bool list) {
    if (list) {
        for (const auto& j : catalog_json())
            std::cout << j["name"].get<std::string>() << "  n=" << j["n"] << " m=" << j["m"] << "  "
                      << j["description"].get<std::string>() << "\n";
        return 0;
    }
    if (name.empty()) throw Error(ErrorKind::Parse, "give a graph name or --list");
    NamedGraph ng = named_graph(name);
    Coloring c = ng.pair.coloring();
    std::cout << "# " << ng.name << ": " << ng.description << "\n" << write_edge_list(ng.graph, &c);
    return 0;
}

GameServer* g_server = nullptr;

int cmd_serve(const std::string& host, int port) {
    GameServer server(default_seed());
    int bound = server.bind(host, port);
    if (bound < 0) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return kExitProperty;
    }
    g_server = &server;
    std::signal(SIGINT, [](int) {
        if (g_server) g_server->stop();
    });
    std::cout << "listening on " << host << ":" << bound << std::endl;
    server.listen();
    g_server = nullptr;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bispanning graphs, exchange graphs and the unique exchange game"};
    app.require_subcommand(1);
    std::string file, sub, form = "u", kind = "general", name, host = "127.0.0.1";
    int variant = 3, deg3 = -1, n = 0, port = 8080;
    bool dot = false, json = false, at_given = false, two_sum = false, list = false;

    auto* check = app.add_subcommand("check", "is the graph bispanning? print a tree pair");
    check->add_option("file", file)->required();
    auto* trees = app.add_subcommand("trees", "colored edge list of a tree pair");
    trees->add_option("file", file)->required();
    auto* classify = app.add_subcommand("classify", "atomic or composite, connectivity class");
    classify->add_option("file", file)->required();
    auto* tau = app.add_subcommand("tau", "exchange graph statistics");
    tau->add_option("file", file)->required();
    tau->add_option("--variant", variant, "2, 3 or 4")->check(CLI::IsMember({2, 3, 4}));
    tau->add_option("--form", form, "d, u or s")->check(CLI::IsMember({"d", "u", "s"}));
    tau->add_flag("--dot", dot);
    tau->add_flag("--json", json);
    auto* nu_cmd = app.add_subcommand("nu", "number of full unique exchange paths");
    nu_cmd->add_option("file", file)->required();
    nu_cmd->add_flag("--at-given", at_given, "count at the file's coloring instead of the minimum over pairs");
    auto* cbo = app.add_subcommand("cbo", "cyclic base ordering");
    cbo->add_option("file", file)->required();
    auto* uecbo = app.add_subcommand("uecbo", "unique exchange cyclic base ordering");
    uecbo->add_option("file", file)->required();
    auto* vc = app.add_subcommand("verify-compose", "check a composition theorem against the direct τ3");
    vc->add_option("file", file)->required();
    vc->add_option("--sub", sub, "comma-separated vertices of a bispanning subgraph");
    vc->add_flag("--2sum", two_sum);
    vc->add_option("--deg3", deg3, "degree-3 vertex");
    auto* en = app.add_subcommand("enumerate", "all non-isomorphic bispanning graphs on N vertices");
    en->add_option("n", n)->required();
    en->add_option("--kind", kind)->check(CLI::IsMember({"general", "simple", "atomic"}));
    auto* named = app.add_subcommand("named", "catalog graph with its drawn coloring");
    named->add_option("name", name);
    named->add_flag("--list", list);
    auto* serve = app.add_subcommand("serve", "HTTP JSON game service");
    serve->add_option("--port", port);
    serve->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (*check) return cmd_check(file);
        if (*trees) return cmd_trees(file);
        if (*classify) return cmd_classify(file);
        if (*tau) return cmd_tau(file, variant, form, dot, json);
        if (*nu_cmd) return cmd_nu(file, at_given);
        if (*cbo) return cmd_cbo(file);
        if (*uecbo) return cmd_uecbo(file);
        if (*vc) return cmd_verify_compose(file, sub, two_sum, deg3);
        if (*en) return cmd_enumerate(n, kind);
        if (*named) return cmd_named(name, list);
        if (*serve) return cmd_serve(host, port);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? kExitParse : kExitProperty;
    } catch (const InternalError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
