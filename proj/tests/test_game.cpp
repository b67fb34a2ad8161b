#include <functional>
#include <optional>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "bispan/catalog.hpp"
#include "bispan/exchange.hpp"
#include "bispan/game.hpp"
#include "bispan/ordering.hpp"
#include "support.hpp"

using namespace bispan;
using namespace testing_support;

namespace {

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

TreePair w5_pair() {
    MultiGraph g = w5();
    return {g, EdgeSet{1, 4, 6, 7}, EdgeSet{0, 2, 3, 5}};
}

// edges sharing their initial color after fixing with f
int matches_initial(const GameState& s, EdgeId f) {
    EdgeSet blue = s.blue;
    blue.flip(f);
    return s.host.m() - (blue ^ s.initial_S).size();
}

}  // namespace

TEST_CASE("one forced round on the game board", "[game]") {
    NamedGraph b = named_graph("game");
    GameState s = new_game(b.pair);
    CHECK(s.phase == Phase::AliceTurn);
    CHECK(s.target_distance() == b.graph.m());
    GameState f = alice_flip(s, 0);
    CHECK(f.phase == Phase::BobMustFix);
    REQUIRE(f.pending);
    CHECK(f.pending->candidates == EdgeSet{12});
    CHECK(f.pending->forced);
    CHECK(f.pending->cycle.contains(0));
    CHECK(f.pending->cut.contains(0));
    CHECK(f.pending->candidates == (f.pending->cycle & f.pending->cut).minus(EdgeSet{0}));
    auto [bob, g2] = bob_auto(f);
    CHECK(bob == 12);
    CHECK(g2.phase == Phase::AliceTurn);
    CHECK(g2.pair().S == apply_exchange(b.pair, 0, 12).S);
    REQUIRE(g2.history.size() == 1);
    CHECK(g2.history[0].alice == 0);
    CHECK(g2.history[0].bob == 12);
    CHECK(g2.moves == 2);
}

TEST_CASE("a flip with three candidates", "[game]") {
    NamedGraph ex = named_graph("exchange-example");
    GameState s = alice_flip(new_game(ex.pair), 9);
    REQUIRE(s.pending);
    CHECK(s.pending->candidates == (EdgeSet{10, 13, 14}));
    CHECK_FALSE(s.pending->forced);

    // adversarial: most edges back in their initial color, lowest id on ties
    EdgeId want = -1;
    int best = -1;
    s.pending->candidates.for_each([&](EdgeId f) {
        int m = matches_initial(s, f);
        if (m > best) {
            best = m;
            want = f;
        }
    });
    auto [bob, t] = bob_auto(s);
    CHECK(bob == want);
    CHECK(bob_auto(s).first == bob);
    CHECK(t.pair().valid());

    for (EdgeId f : {10, 13, 14}) {
        GameState u = bob_fix(s, f);
        CHECK(u.pair().valid());
    }
    CHECK(kind_of([&] { bob_fix(s, 11); }) == ErrorKind::IllegalFix);
    CHECK(kind_of([&] { bob_fix(s, 99); }) == ErrorKind::UnknownEdge);
    CHECK(kind_of([&] { alice_flip(s, 10); }) == ErrorKind::WrongPhase);
}

TEST_CASE("replaying the W5 ordering wins", "[game]") {
    GameState s = new_game(w5_pair(), Policy::Manual);
    std::vector<Swap> moves{{0, 7}, {1, 3}, {2, 4}, {6, 5}};
    for (const Swap& m : moves) {
        s = alice_flip(s, m.e);
        REQUIRE(s.pending);
        CHECK(s.pending->forced);
        s = bob_fix(s, m.f);
        if (!s.won()) CHECK(s.pair().valid());
    }
    CHECK(s.won());
    CHECK(s.phase == Phase::Won);
    CHECK(s.target_distance() == 0);
    CHECK(s.history.size() == 4);
    CHECK(kind_of([&] { alice_flip(s, 0); }) == ErrorKind::WrongPhase);
    CHECK(kind_of([&] { bob_auto(s); }) == ErrorKind::WrongPhase);
}

TEST_CASE("forced-only games are unique exchange orderings", "[game]") {
    std::mt19937 rng(51);
    for (int it = 0; it < 100; ++it) {
        TreePair tp = random_bispanning(rng, 2 + it % 6);
        GameState s = new_game(tp, Policy::Adversarial, it);
        int rounds = 0;
        while (!s.won() && rounds < tp.g.m() / 2) {
            auto h = hint(s);
            REQUIRE(h);
            s = alice_flip(s, *h);
            REQUIRE(s.pending);
            CHECK(s.pending->forced);
            s = bob_auto(s).second;
            ++rounds;
        }
        CHECK(s.won());
        SwapSequence seq{tp, {}};
        for (const Round& r : s.history) seq.swaps.push_back({r.alice, r.bob});
        CHECK(verify_uecbo(seq));
    }
}

TEST_CASE("hints", "[game]") {
    GameState s = new_game(w5_pair());
    auto h = hint(s);
    REQUIRE(h);
    auto path = find_forced_path(w5_pair(), w5_pair().T);
    REQUIRE(path);
    CHECK(*h == path->front().e);
    CHECK(unique_exchange(s.pair(), *h).has_value());

    // one swap from the target: the closing edge
    for (const Swap& m : std::vector<Swap>{{0, 7}, {1, 3}, {2, 4}}) s = bob_fix(alice_flip(s, m.e), m.f);
    auto last = hint(s);
    REQUIRE(last);
    CHECK((*last == 6 || *last == 5));

    // K4: a leaf exchange
    MultiGraph g = k4();
    TreePair tp{g, EdgeSet{1, 2, 3}, EdgeSet{0, 4, 5}};
    auto k = hint(new_game(tp));
    REQUIRE(k);
    bool leaf = false;
    for (const ExchangeArc& a : leaf_unique_exchanges(tp)) leaf |= a.e == *k;
    CHECK(leaf);
}

TEST_CASE("undo", "[game]") {
    GameState s0 = new_game(w5_pair());
    CHECK(kind_of([&] { undo(s0); }) == ErrorKind::EmptyHistory);
    GameState s1 = alice_flip(s0, 0);
    GameState back = undo(s1);
    CHECK(back.blue == s0.blue);
    CHECK(back.phase == Phase::AliceTurn);
    CHECK_FALSE(back.pending);
    GameState s2 = bob_fix(s1, 7);
    GameState r = undo(s2);
    CHECK(r.blue == s0.blue);
    CHECK(r.history.empty());
    CHECK(r.phase == Phase::AliceTurn);
}

TEST_CASE("random Bob is reproducible", "[game]") {
    NamedGraph ex = named_graph("exchange-example");
    for (uint64_t seed : {1ull, 2ull, 99ull}) {
        GameState s = alice_flip(new_game(ex.pair, Policy::Random, seed), 9);
        EdgeId a = bob_auto(s).first, b = bob_auto(s).first;
        CHECK(a == b);
        CHECK(s.pending->candidates.contains(a));
    }
    // over many seeds more than one candidate is chosen
    std::set<EdgeId> seen;
    for (uint64_t seed = 0; seed < 40; ++seed)
        seen.insert(bob_auto(alice_flip(new_game(ex.pair, Policy::Random, seed), 9)).first);
    CHECK(seen.size() > 1);
}

TEST_CASE("game JSON and errors", "[game]") {
    GameState s = alice_flip(new_game(w5_pair()), 0);
    nlohmann::json j = to_json(s);
    CHECK(j["n"] == 5);
    CHECK(j["edges"].size() == 8);
    CHECK(j["phase"] == "bob-must-fix");
    CHECK(j["pending"]["edge"] == 0);
    CHECK(j["pending"]["forced"] == true);
    CHECK(j["pending"]["candidates"] == nlohmann::json::array({7}));
    CHECK(j["won"] == false);
    CHECK(j["policy"] == "adversarial");
    for (const auto& e : j["edges"]) CHECK((e["color"] == "blue" || e["color"] == "red"));

    MultiGraph g = k4();
    TreePair bad{g, EdgeSet{0, 1, 2}, EdgeSet{3, 4, 5}};
    CHECK(kind_of([&] { new_game(bad); }) == ErrorKind::NotBispanning);
    CHECK(parse_policy("random") == Policy::Random);
    CHECK(kind_of([&] { parse_policy("nice"); }) == ErrorKind::Parse);
}
