#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bispan/bispanning.hpp"

namespace bispan {

enum class Phase { AliceTurn, BobMustFix, Won };
enum class Policy { Adversarial, Random, Manual };

const char* to_string(Phase p);
const char* to_string(Policy p);
// "adversarial", "random", "manual"; Parse otherwise
Policy parse_policy(const std::string& s);

struct Pending {
    EdgeId flipped;
    EdgeSet cycle;       // C(other tree, e)
    EdgeSet cut;         // D(own tree, e)
    EdgeSet candidates;  // cut ∩ cycle - e
    bool forced;
};

struct Round {
    EdgeId alice;
    EdgeId bob;
};

// Immutable game state; every operation returns a new one.
struct GameState {
    MultiGraph host;
    EdgeSet initial_S;  // blue at the start
    EdgeSet blue;       // current blue edges (Alice's flip included while Bob must fix)
    Phase phase = Phase::AliceTurn;
    std::optional<Pending> pending;
    std::vector<Round> history;
    Policy policy = Policy::Adversarial;
    uint64_t seed = 0;
    int moves = 0;  // half-moves played

    EdgeSet target_S() const { return host.edge_set().minus(initial_S); }
    // the tree pair before Alice's pending flip
    TreePair pair() const;
    // edges whose color differs from the target coloring
    int target_distance() const;
    bool won() const { return phase == Phase::Won; }
};

GameState new_game(const TreePair& tp, Policy policy = Policy::Adversarial, uint64_t seed = 0);
GameState alice_flip(const GameState& s, EdgeId e);
GameState bob_fix(const GameState& s, EdgeId f);
// forced: the only candidate. adversarial: the candidate leaving most edges in their initial color,
// lowest id on ties. random: seeded by (seed, moves). manual sessions use the adversarial rule.
std::pair<EdgeId, GameState> bob_auto(const GameState& s);
// first move of a forced path to the target, searched to the remaining number of swaps
std::optional<EdgeId> hint(const GameState& s);
// pending flip: drop it. otherwise revert the last full round.
GameState undo(const GameState& s);

nlohmann::json to_json(const GameState& s);

}  // namespace bispan
