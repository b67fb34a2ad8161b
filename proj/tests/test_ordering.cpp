#include <random>

#include "catch_amalgamated.hpp"

#include "bispan/catalog.hpp"
#include "bispan/enumerate.hpp"
#include "bispan/exchange.hpp"
#include "bispan/ordering.hpp"
#include "support.hpp"

using namespace bispan;
using namespace testing_support;

namespace {

// cyclic windows by union-find
bool windows_ok(const MultiGraph& g, const std::vector<EdgeId>& order) {
    int m = static_cast<int>(order.size()) / 2;
    for (int s = 0; s < 2 * m; ++s) {
        EdgeSet w;
        for (int k = 0; k < m; ++k) w.insert(order[(s + k) % (2 * m)]);
        if (!is_tree_uf(g, w)) return false;
    }
    return true;
}

// every step unique, ends at the complement
bool walk_unique(const SwapSequence& seq) {
    TreePair tp = seq.start;
    for (const Swap& s : seq.swaps) {
        if (!tp.g.has_edge(s.e)) return false;
        EdgeSet c = exchange_candidates(tp, s.e);
        if (c.size() != 1 || c.first() != s.f) return false;
        tp = apply_exchange(tp, s.e, s.f);
    }
    return tp.S == seq.start.T;
}

SwapSequence from_order(const TreePair& tp, const std::vector<EdgeId>& s, const std::vector<EdgeId>& t) {
    SwapSequence seq{tp, {}};
    for (std::size_t i = 0; i < s.size(); ++i) seq.swaps.push_back({s[i], t[i]});
    return seq;
}

TreePair w5_pair() {
    MultiGraph g = w5();
    return {g, EdgeSet{1, 4, 6, 7}, EdgeSet{0, 2, 3, 5}};
}

MultiGraph k4_join() { return MultiGraph::build(4, {{0, 1}, {0, 3}, {0, 2}, {1, 3}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("build_cbo passes the window test", "[ordering]") {
    std::mt19937 rng(21);
    for (int it = 0; it < 300; ++it) {
        TreePair tp = random_bispanning(rng, 1 + it % 9);
        SwapSequence seq = build_cbo(tp);
        REQUIRE(seq.length() == tp.g.m() / 2);
        CHECK(verify_cbo(seq));
        auto order = seq.edge_order();
        REQUIRE(static_cast<int>(order.size()) == tp.g.m());
        CHECK(windows_ok(tp.g, order));
        // the first half is S and the second T
        CHECK(EdgeSet::from({order.begin(), order.begin() + tp.g.m() / 2}) == tp.S);
    }
}

TEST_CASE("build_cbo base cases", "[ordering]") {
    MultiGraph k1(1, {});
    TreePair t1{k1, {}, {}};
    CHECK(build_cbo(t1).swaps.empty());
    CHECK(verify_cbo(build_cbo(t1)));

    MultiGraph b2 = MultiGraph::build(2, {{0, 1}, {0, 1}});
    SwapSequence s = build_cbo({b2, EdgeSet{0}, EdgeSet{1}});
    REQUIRE(s.length() == 1);
    CHECK(s.swaps[0] == Swap{0, 1});
    CHECK(verify_cbo(s));
    CHECK(verify_uecbo(s));
}

TEST_CASE("W5 cyclic base orderings", "[ordering]") {
    TreePair tp = w5_pair();
    std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> drawn = {
        {{6, 1, 7, 4}, {5, 2, 0, 3}},
        {{6, 7, 1, 4}, {5, 0, 2, 3}},
        {{6, 4, 1, 7}, {5, 2, 0, 3}},
        {{6, 4, 1, 7}, {5, 2, 3, 0}},
    };
    for (auto& [s, t] : drawn) {
        SwapSequence seq = from_order(tp, s, t);
        CHECK(verify_cbo(seq));
    }
    SwapSequence built = build_cbo(tp);
    CHECK(verify_cbo(built));
    CHECK(built.edge_order() == std::vector<EdgeId>{6, 4, 1, 7, 2, 5, 0, 3});
}

TEST_CASE("transposed orderings usually fail the window test", "[ordering]") {
    std::mt19937 rng(23);
    int failed = 0, tried = 0;
    for (int it = 0; it < 100; ++it) {
        TreePair tp = random_bispanning(rng, 5 + it % 4);
        SwapSequence seq = build_cbo(tp);
        auto order = seq.edge_order();
        std::swap(order[0], order[order.size() - 2]);
        ++tried;
        if (!windows_ok(tp.g, order)) ++failed;
    }
    CHECK(failed > tried / 2);

    SwapSequence seq = build_cbo(w5_pair());
    seq.swaps.pop_back();
    CHECK_THROWS_AS(verify_cbo(seq), Error);
}

TEST_CASE("W5 unique exchange orderings and reversal", "[ordering]") {
    TreePair tp = w5_pair();
    SwapSequence row1{tp, {{0, 7}, {1, 3}, {2, 4}, {6, 5}}};
    CHECK(verify_uecbo(row1));
    SwapSequence row2 = reverse_uecbo(row1);
    CHECK(row2.swaps == std::vector<Swap>{{5, 6}, {4, 2}, {3, 1}, {7, 0}});
    CHECK(verify_uecbo(row2));
    CHECK(reverse_uecbo(row2).swaps == row1.swaps);
    CHECK(format_swaps(row1.swaps) == "< (0,7), (1,3), (2,4), (6,5) >");

    auto found = find_uecbo(tp);
    REQUIRE(found);
    CHECK(verify_uecbo(*found));
    CHECK(found->length() == 4);

    // one step out of order is no longer forced
    SwapSequence bad{tp, {{1, 3}, {0, 7}, {2, 4}, {6, 5}}};
    CHECK(verify_uecbo(bad) == walk_unique(bad));
    CHECK_THROWS_AS(reverse_uecbo(SwapSequence{tp, {{0, 7}}}), Error);
}

TEST_CASE("verify_uecbo agrees with a step-by-step walk", "[ordering]") {
    std::mt19937 rng(29);
    int non_unique = 0;
    for (int it = 0; it < 200; ++it) {
        TreePair tp = random_bispanning(rng, 2 + it % 7);
        SwapSequence cbo = build_cbo(tp);
        bool v = verify_uecbo(cbo);
        CHECK(v == walk_unique(cbo));
        if (!v) ++non_unique;
        auto u = find_uecbo(tp);
        REQUIRE(u);
        CHECK(verify_uecbo(*u));
        CHECK(walk_unique(*u));
        CHECK(u->length() == tp.g.m() / 2);
        SwapSequence r = reverse_uecbo(*u);
        CHECK(walk_unique(r));
        CHECK(verify_cbo(*u));
    }
    // the inductive construction is not always unique-exchange
    CHECK(non_unique > 0);
}

TEST_CASE("unique exchange orderings exist on K4", "[ordering]") {
    MultiGraph g = k4();
    for (const EdgeSet& S : enumerate_tree_pairs(g)) {
        auto u = find_uecbo({g, S, g.edge_set().minus(S)});
        REQUIRE(u);
        CHECK(u->length() == 3);
    }
}

TEST_CASE("forced paths", "[ordering]") {
    TreePair tp = w5_pair();
    auto p = find_forced_path(tp, tp.T);
    REQUIRE(p);
    CHECK(p->size() == 4);
    CHECK(walk_unique(SwapSequence{tp, *p}));
    auto none = find_forced_path(tp, tp.S);
    REQUIRE(none);
    CHECK(none->empty());
    CHECK_THROWS_AS(find_forced_path(tp, EdgeSet{0, 1, 2, 3}), Error);
    CHECK_THROWS_AS(find_uecbo(named_graph("B18,1").pair), Error);
}

TEST_CASE("joining at a 2-clique sum", "[ordering]") {
    MultiGraph g = k4_join();
    SwapSequence a{{g, EdgeSet{0, 2, 3}, EdgeSet{1, 4, 5}}, {{2, 5}, {1, 3}, {0, 4}}};
    SwapSequence b{{g, EdgeSet{1, 4, 5}, EdgeSet{0, 2, 3}}, {{3, 5}, {4, 2}, {0, 1}}};
    REQUIRE(verify_uecbo(a));
    REQUIRE(verify_uecbo(b));
    SwapSequence j = join_uecbo_2sum(a, b, 3, 2);
    CHECK(j.swaps == std::vector<Swap>{{2, 5}, {7, 6}, {1, 10}, {0, 4}, {11, 9}});
    CHECK(verify_uecbo(j));

    std::vector<std::vector<Swap>> all = {
        {{2, 5}, {7, 6}, {1, 10}, {0, 4}, {11, 9}},
        {{7, 6}, {2, 5}, {1, 10}, {0, 4}, {11, 9}},
        {{2, 5}, {7, 6}, {1, 10}, {11, 9}, {0, 4}},
        {{7, 6}, {2, 5}, {1, 10}, {11, 9}, {0, 4}},
    };
    int k = 0;
    for (const char* before : {"ab", "ba"})
        for (const char* after : {"ab", "ba"}) {
            SwapSequence s = join_uecbo_2sum(a, b, 3, 2, {before, after});
            CHECK(verify_uecbo(s));
            CHECK(std::find(all.begin(), all.end(), s.swaps) != all.end());
            ++k;
        }
    CHECK(k == 4);

    CHECK_THROWS_AS(join_uecbo_2sum(a, b, 3, 2, {"aab", ""}), Error);
    // both seams in S
    CHECK_THROWS_AS(join_uecbo_2sum(a, b, 3, 1), Error);
}

TEST_CASE("joined orderings verify on random sums", "[ordering]") {
    std::mt19937 rng(31);
    int done = 0;
    for (int it = 0; it < 200 && done < 40; ++it) {
        TreePair p1 = random_bispanning(rng, 3 + it % 3);
        TreePair p2 = random_bispanning(rng, 3 + (it / 3) % 3);
        EdgeId d1 = p1.S.first(), d2 = p2.T.first();
        auto u1 = find_uecbo(p1), u2 = find_uecbo(p2);
        REQUIRE(u1);
        REQUIRE(u2);
        for (int o = 0; o < 2; ++o) {
            SwapSequence j = join_uecbo_2sum(*u1, *u2, d1, d2, {}, o);
            CHECK(verify_uecbo(j));
            CHECK(j.host().m() == p1.g.m() + p2.g.m() - 2);
            CHECK(verify_bispanning(j.host()));
        }
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("swap sequence JSON round trip", "[ordering]") {
    TreePair tp = w5_pair();
    SwapSequence s{tp, {{0, 7}, {1, 3}, {2, 4}, {6, 5}}};
    nlohmann::json j = to_json(s);
    SwapSequence back = swap_sequence_from_json(tp.g, j);
    CHECK(back.swaps == s.swaps);
    CHECK(back.start.S == s.start.S);
    CHECK_THROWS_AS(swap_sequence_from_json(tp.g, nlohmann::json{{"start_S", {1, 4, 6, 99}}, {"swaps", nlohmann::json::array()}}),
                    Error);
    CHECK_THROWS_AS(swap_sequence_from_json(tp.g, nlohmann::json{{"swaps", 3}}), Error);
}
