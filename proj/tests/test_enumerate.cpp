#include <functional>
#include <map>
#include <set>

#include "catch_amalgamated.hpp"

#include "bispan/catalog.hpp"
#include "bispan/enumerate.hpp"
#include "support.hpp"

using namespace bispan;
using namespace testing_support;

namespace {

// every multigraph with 2n-2 edges and multiplicity <= 2, filtered by the partition condition,
// deduped by the permutation-search code; returns one representative per class
std::map<CanonicalCode, MultiGraph> brute_force(int n, GraphKind kind) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
    std::map<CanonicalCode, MultiGraph> out;
    std::vector<int> mult(slots.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == slots.size()) {
            if (left != 0) return;
            std::vector<std::pair<Vertex, Vertex>> es;
            for (std::size_t k = 0; k < slots.size(); ++k)
                for (int r = 0; r < mult[k]; ++r) es.push_back(slots[k]);
            MultiGraph g = MultiGraph::build(n, es);
            if (!verify_bispanning(g)) return;
            if (kind != GraphKind::General && !g.is_simple()) return;
            if (kind == GraphKind::Atomic && !is_atomic(g)) return;
            out.emplace(canonical_code_bruteforce(g), g);
            return;
        }
        for (int r = 0; r <= std::min(2, left); ++r) {
            mult[i] = r;
            rec(i + 1, left - r);
        }
        mult[i] = 0;
    };
    rec(0, 2 * n - 2);
    return out;
}

bool has_triangle(const MultiGraph& g) {
    for (int a = 0; a < g.n(); ++a)
        for (int b = a + 1; b < g.n(); ++b)
            for (int c = b + 1; c < g.n(); ++c)
                if (g.multiplicity(a, b) && g.multiplicity(b, c) && g.multiplicity(a, c)) return true;
    return false;
}

}  // namespace

TEST_CASE("enumeration counts", "[enumerate]") {
    CHECK(count_bispanning(3, GraphKind::General) == 2);
    CHECK(count_bispanning(4, GraphKind::General) == 9);
    CHECK(count_bispanning(5, GraphKind::General) == 46);
    CHECK(count_bispanning(4, GraphKind::Simple) == 1);
    CHECK(count_bispanning(5, GraphKind::Simple) == 2);
    CHECK(count_bispanning(6, GraphKind::Simple) == 12);
    CHECK(count_bispanning(7, GraphKind::Simple) == 92);
    CHECK(count_bispanning(5, GraphKind::Atomic) == 1);
    CHECK(count_bispanning(6, GraphKind::Atomic) == 4);
    CHECK(count_bispanning(7, GraphKind::Atomic) == 15);
    CHECK(count_bispanning(1, GraphKind::General) == 1);
    CHECK(count_bispanning(2, GraphKind::General) == 1);
}

TEST_CASE("enumeration matches an exhaustive search", "[enumerate]") {
    for (int n = 2; n <= 5; ++n)
        for (GraphKind k : {GraphKind::General, GraphKind::Simple, GraphKind::Atomic}) {
            auto codes = enumerate_bispanning(n, k);
            std::set<CanonicalCode> got(codes.begin(), codes.end());
            CHECK(got.size() == codes.size());
            auto reps = brute_force(n, k);
            std::set<CanonicalCode> want;
            for (auto& [code, g] : reps) want.insert(canonical_code(g));
            CHECK(reps.size() == codes.size());
            CHECK(got == want);
        }
}

TEST_CASE("parallel and serial enumeration agree", "[enumerate]") {
    for (int n = 2; n <= 6; ++n)
        for (GraphKind k : {GraphKind::General, GraphKind::Simple, GraphKind::Atomic}) {
            auto a = enumerate_bispanning_graphs(n, k);
            auto b = enumerate_bispanning_graphs_serial(n, k);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].code == b[i].code);
        }
}

TEST_CASE("enumerated graphs satisfy their kind", "[enumerate]") {
    for (int n = 2; n <= 6; ++n) {
        for (const EnumeratedGraph& eg : enumerate_bispanning_graphs(n, GraphKind::General)) {
            CHECK(eg.graph.n() == n);
            CHECK(eg.graph.m() == 2 * n - 2);
            CHECK(verify_bispanning(eg.graph));
            CHECK(canonical_code(eg.graph) == eg.code);
            if (n >= 2) CHECK(connectivity_class(eg.graph).econn >= 2);
        }
        for (const EnumeratedGraph& eg : enumerate_bispanning_graphs(n, GraphKind::Atomic)) {
            CHECK(is_atomic(eg.graph));
            if (n >= 3) CHECK(eg.graph.is_simple());
            CHECK(parallel_excess(eg.graph) == 0);
        }
    }
    CHECK(parallel_excess(MultiGraph::build(2, {{0, 1}, {0, 1}})) == 1);
}

TEST_CASE("the smallest triangle-free bispanning graph has 7 vertices", "[enumerate]") {
    for (int n = 3; n <= 6; ++n)
        for (const EnumeratedGraph& eg : enumerate_bispanning_graphs(n, GraphKind::Simple)) CHECK(has_triangle(eg.graph));
    int free7 = 0;
    for (const EnumeratedGraph& eg : enumerate_bispanning_graphs(7, GraphKind::Simple)) free7 += !has_triangle(eg.graph);
    CHECK(free7 >= 1);
    CHECK_FALSE(has_triangle(named_graph("B7,1").graph));
}

TEST_CASE("catalog graphs appear in the enumeration", "[enumerate]") {
    for (const char* name : {"K4", "W5", "B6,3", "B6,12"}) {
        MultiGraph g = named_graph(name).graph;
        auto codes = enumerate_bispanning(g.n(), GraphKind::Simple);
        CHECK(std::binary_search(codes.begin(), codes.end(), canonical_code(g)));
    }
    auto codes = enumerate_bispanning(7, GraphKind::Simple);
    CHECK(std::binary_search(codes.begin(), codes.end(), canonical_code(named_graph("B7,1").graph)));
}

TEST_CASE("enumeration limits and kinds", "[enumerate]") {
    CHECK_THROWS_AS(enumerate_bispanning(kMaxEnumGeneral + 1, GraphKind::General), Error);
    CHECK_THROWS_AS(enumerate_bispanning(kMaxEnumSimple + 1, GraphKind::Simple), Error);
    CHECK_THROWS_AS(enumerate_bispanning(0, GraphKind::Simple), Error);
    CHECK(parse_graph_kind("atomic") == GraphKind::Atomic);
    CHECK(std::string(to_string(GraphKind::Simple)) == "simple");
    CHECK_THROWS_AS(parse_graph_kind("odd"), Error);
}
