#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bispan/bispanning.hpp"

namespace bispan {

struct Swap {
    EdgeId e;
    EdgeId f;
    bool operator==(const Swap&) const = default;
};

// An edge swap sequence from start = (S,T). Step i exchanges e_i and f_i between the trees.
struct SwapSequence {
    TreePair start;
    std::vector<Swap> swaps;

    const MultiGraph& host() const { return start.g; }
    int length() const { return static_cast<int>(swaps.size()); }
    // the cyclic edge order s_1..s_m t_1..t_m; empty if some step does not move an edge out of S
    std::vector<EdgeId> edge_order() const;
};

// Cyclic base ordering by the inductive construction (degree 2 first, lowest vertex).
SwapSequence build_cbo(const TreePair& tp);

// every window of |E|/2 cyclically consecutive edges is a spanning tree
bool verify_cbo(const SwapSequence& seq);

inline constexpr int kMaxUecboHalf = 12;

// depth |E|/2 path (S,T) -> (T,S) in directed τ3, S exchanges first, then lowest e
std::optional<SwapSequence> find_uecbo(const TreePair& tp);

// shortest unique-exchange path from tp to the pair with S = target_S; every step moves an edge
// that is not yet in its target tree
std::optional<std::vector<Swap>> find_forced_path(const TreePair& tp, const EdgeSet& target_S);

bool verify_uecbo(const SwapSequence& seq);

// <(f_m,e_m), ..., (f_1,e_1)>, same start
SwapSequence reverse_uecbo(const SwapSequence& seq);

// interleaving of the swaps before and after the seam; 'a' takes the next swap of the first
// sequence, 'b' of the second. Empty strings mean all of a, then all of b.
struct JoinSchedule {
    std::string before;
    std::string after;
};

// UECBO of G1 ⊕2 G2 (clique2_sum with the given orientation) from UECBOs of the parts.
// d1 and d2 must lie in different trees of the two start pairs.
SwapSequence join_uecbo_2sum(const SwapSequence& a, const SwapSequence& b, EdgeId d1, EdgeId d2,
                             const JoinSchedule& schedule = {}, int orientation = 0);

// <(e1,f1), (e2,f2)>
std::string format_swaps(const std::vector<Swap>& swaps);
nlohmann::json to_json(const SwapSequence& seq);
// start_S, swaps; host supplied by the caller
SwapSequence swap_sequence_from_json(const MultiGraph& g, const nlohmann::json& j);

}  // namespace bispan
