#include "bispan/io.hpp"

#include <fstream>
#include <sstream>

namespace bispan {

ColoredGraph read_edge_list(std::istream& in) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            std::size_t a = out.find_first_not_of(" \t\r");
            if (a == std::string::npos || out[a] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line(line)) throw Error(ErrorKind::Parse, "missing header line");
    int n = -1, m = -1;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::Parse, "bad header: " + line);
    }
    std::vector<Edge> es;
    std::vector<Color> cs;
    for (int i = 0; i < m; ++i) {
        if (!next_line(line)) throw Error(ErrorKind::Parse, "expected " + std::to_string(m) + " edge lines");
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw Error(ErrorKind::Parse, "bad edge line: " + line);
        std::string c;
        Color col = Color::Black;
        if (ls >> c) {
            if (c == "b" || c == "B") col = Color::Blue;
            else if (c == "r" || c == "R") col = Color::Red;
            else if (c != "-") throw Error(ErrorKind::Parse, "bad color '" + c + "'");
        }
        es.push_back({i, u, v});
        cs.push_back(col);
    }
    ColoredGraph out{MultiGraph(n, std::move(es)), std::move(cs)};
    return out;
}

ColoredGraph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

ColoredGraph load_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Parse, "cannot open " + path);
    return read_edge_list(f);
}

std::string write_edge_list(const MultiGraph& g, const Coloring* colors) {
    std::ostringstream os;
    os << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) {
        os << e.u << ' ' << e.v;
        if (colors) {
            Color c = (*colors)[e.id];
            os << ' ' << (c == Color::Blue ? 'b' : c == Color::Red ? 'r' : '-');
        }
        os << '\n';
    }
    return os.str();
}

std::string to_dot(const MultiGraph& g, const Coloring* colors) {
    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v << " [label=\"" << e.id << '"';
        if (colors) {
            Color c = (*colors)[e.id];
            if (c == Color::Blue) os << ", color=blue";
            else if (c == Color::Red) os << ", color=red";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

Coloring coloring_from(const MultiGraph& g, const EdgeSet& blue, const EdgeSet& red) {
    Coloring c(g.id_bound(), Color::Black);
    for (const Edge& e : g.edges()) {
        if (blue.contains(e.id)) c[e.id] = Color::Blue;
        else if (red.contains(e.id)) c[e.id] = Color::Red;
    }
    return c;
}

}  // namespace bispan
