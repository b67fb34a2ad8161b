#include <random>

#include "catch_amalgamated.hpp"

#include "bispan/enumerate.hpp"
#include "support.hpp"

using namespace bispan;
using namespace testing_support;

namespace {

bool kind_is(const Error& e, ErrorKind k) { return e.kind() == k; }

}  // namespace

TEST_CASE("tree packing agrees with the partition condition on small multigraphs", "[bispanning]") {
    std::mt19937 rng(1);
    for (int it = 0; it < 3000; ++it) {
        int n = 2 + it % 5;
        MultiGraph g = random_multigraph(rng, n, 2 * n - 2);
        auto tp = find_two_trees(g);
        CHECK(tp.has_value() == verify_bispanning(g));
        if (tp) {
            CHECK(is_tree_uf(g, tp->S));
            CHECK(is_tree_uf(g, tp->T));
            CHECK((tp->S | tp->T) == g.edge_set());
            CHECK((tp->S & tp->T).empty());
        }
    }
}

TEST_CASE("augmenting through a parallel-edge cycle does not abort", "[bispanning]") {
    MultiGraph g = MultiGraph::build(3, {{1, 0}, {0, 2}, {1, 0}, {0, 1}});
    CHECK_FALSE(find_two_trees(g).has_value());
    CHECK_FALSE(verify_bispanning(g));
}

TEST_CASE("tree packing honours a valid precoloring", "[bispanning]") {
    MultiGraph g = k4();
    Coloring pre(g.id_bound(), Color::Black);
    pre[0] = Color::Blue;
    pre[5] = Color::Red;
    auto tp = find_two_trees(g, pre);
    REQUIRE(tp);
    CHECK(tp->valid());
}

TEST_CASE("tree pair validity", "[bispanning]") {
    MultiGraph g = k4();
    TreePair good{g, EdgeSet{1, 2, 3}, EdgeSet{0, 4, 5}};
    CHECK(good.valid());
    CHECK(good.swapped().S == good.T);
    TreePair bad{g, EdgeSet{0, 1, 2}, EdgeSet{3, 4, 5}};
    CHECK_FALSE(bad.valid());
    CHECK_THROWS_AS(bad.check(), Error);
}

TEST_CASE("fast atomic test matches the strict partition condition", "[bispanning]") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& e : enumerate_bispanning_graphs(n, GraphKind::General))
            CHECK(is_atomic_fast(e.graph) == is_atomic(e.graph));
}

TEST_CASE("construction steps keep tree pairs", "[bispanning]") {
    std::mt19937 rng(4);
    for (int it = 0; it < 200; ++it) {
        TreePair tp = random_bispanning(rng, 2 + it % 10);
        CHECK(tp.valid());
    }
    TreePair k1{MultiGraph(1, {}), {}, {}};
    TreePair b2 = double_attach(k1, 0, 0);
    CHECK(b2.g.n() == 2);
    CHECK(b2.valid());
    CHECK_THROWS_AS(double_attach(k1, 0, 1), Error);
    CHECK_THROWS_AS(edge_split_attach(b2, 7, 0), Error);
}

TEST_CASE("bispanning subgraph search", "[bispanning]") {
    CHECK_FALSE(find_bispanning_subgraph(k4()).has_value());
    // two K4 glued at a vertex: composite
    MultiGraph g = MultiGraph::build(4, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 3}});
    auto sub = find_bispanning_subgraph(g);
    REQUIRE(sub);
    CHECK(sub->size() == 2);
    CHECK(find_two_trees(induced(g, *sub)).has_value());
}

TEST_CASE("degree-3 reduction of W5", "[bispanning]") {
    MultiGraph g = w5();
    Deg3Reduction r = reduce_deg3(g, 1);
    for (int k = 0; k < 3; ++k) {
        CHECK(r.graphs[k].n() == 4);
        CHECK(r.graphs[k].m() == 6);
        CHECK(find_two_trees(r.graphs[k]).has_value());
        CHECK(r.graphs[k].has_edge(r.split[k]));
        CHECK_FALSE(r.graphs[k].has_edge(r.attach[k]));
    }
    CHECK_THROWS_MATCHES(reduce_deg3(g, 0), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return kind_is(e, ErrorKind::WrongDegree);
                         }));
    MultiGraph comp = MultiGraph::build(4, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 3}, });
    CHECK_THROWS_AS(reduce_deg3(comp, 1), Error);
}

TEST_CASE("2-clique sum of two K4", "[bispanning]") {
    MultiGraph g = clique2_sum(k4(), 0, k4(), 0, 0);
    CHECK(g.n() == 6);
    CHECK(g.m() == 10);
    CHECK(find_two_trees(g).has_value());
    CHECK(is_atomic_fast(g));
    CHECK(connectivity(g).vconn == 2);
    auto parts = decompose_2vconn(g);
    REQUIRE(parts);
    CHECK(parts->g1.n() == 4);
    CHECK(parts->g2.n() == 4);
    CHECK(canonical_code(parts->g1) == canonical_code(k4()));
    CHECK(canonical_code(clique2_sum(parts->g1, parts->d1, parts->g2, parts->d2, 0)) == canonical_code(g));
}

TEST_CASE("atomic graphs: simple, connectivity class, contract-delete", "[bispanning]") {
    for (int n = 4; n <= 7; ++n) {
        for (const auto& e : enumerate_bispanning_graphs(n, GraphKind::Atomic)) {
            const MultiGraph& g = e.graph;
            CHECK(g.is_simple());
            Connectivity c = connectivity_class(g);
            CHECK(c.econn == 3);
            CHECK((c.vconn == 2 || c.vconn == 3));
            for (EdgeId a : g.edge_set().ids())
                for (EdgeId b : g.edge_set().ids())
                    if (a != b) CHECK(find_two_trees(contract_delete(g, a, b)).has_value());
        }
    }
}
