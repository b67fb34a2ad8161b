#include "bispan/game.hpp"

#include <random>

#include "bispan/exchange.hpp"
#include "bispan/ordering.hpp"

namespace bispan {

const char* to_string(Phase p) {
    switch (p) {
    case Phase::AliceTurn: return "alice-turn";
    case Phase::BobMustFix: return "bob-must-fix";
    case Phase::Won: return "won";
    }
    return "?";
}

const char* to_string(Policy p) {
    switch (p) {
    case Policy::Adversarial: return "adversarial";
    case Policy::Random: return "random";
    case Policy::Manual: return "manual";
    }
    return "?";
}

Policy parse_policy(const std::string& s) {
    if (s == "adversarial") return Policy::Adversarial;
    if (s == "random") return Policy::Random;
    if (s == "manual") return Policy::Manual;
    throw Error(ErrorKind::Parse, "unknown policy '" + s + "'");
}

TreePair GameState::pair() const {
    EdgeSet S = blue;
    if (pending) S.flip(pending->flipped);
    return {host, S, host.edge_set().minus(S)};
}

int GameState::target_distance() const { return (blue ^ target_S()).size(); }

GameState new_game(const TreePair& tp, Policy policy, uint64_t seed) {
    if (!tp.valid()) throw Error(ErrorKind::NotBispanning, "start coloring is not a pair of spanning trees");
    GameState s;
    s.host = tp.g;
    s.initial_S = tp.S;
    s.blue = tp.S;
    s.policy = policy;
    s.seed = seed;
    return s;
}

GameState alice_flip(const GameState& s, EdgeId e) {
    if (s.phase != Phase::AliceTurn) throw Error(ErrorKind::WrongPhase, std::string("flip during ") + to_string(s.phase));
    if (!s.host.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e));
    TreePair tp = s.pair();
    const EdgeSet& own = tp.S.contains(e) ? tp.S : tp.T;
    const EdgeSet& other = tp.S.contains(e) ? tp.T : tp.S;
    Pending p;
    p.flipped = e;
    p.cycle = fundamental_cycle(s.host, other, e);
    p.cut = fundamental_cut(s.host, own, e);
    p.candidates = exchange_candidates(tp, e);
    p.forced = p.candidates.size() == 1;
    GameState out = s;
    out.blue.flip(e);
    out.pending = p;
    out.phase = Phase::BobMustFix;
    ++out.moves;
    return out;
}

GameState bob_fix(const GameState& s, EdgeId f) {
    if (s.phase != Phase::BobMustFix || !s.pending) throw Error(ErrorKind::WrongPhase, std::string("fix during ") + to_string(s.phase));
    if (!s.host.has_edge(f)) throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(f));
    if (!s.pending->candidates.contains(f))
        throw Error(ErrorKind::IllegalFix, "edge " + std::to_string(f) + " does not restore both trees");
    GameState out = s;
    out.blue.flip(f);
    out.history.push_back({s.pending->flipped, f});
    out.pending.reset();
    ++out.moves;
    out.phase = out.blue == out.target_S() ? Phase::Won : Phase::AliceTurn;
    if (!out.pair().valid()) throw InternalError("fix left an invalid coloring");
    return out;
}

std::pair<EdgeId, GameState> bob_auto(const GameState& s) {
    if (s.phase != Phase::BobMustFix || !s.pending) throw Error(ErrorKind::WrongPhase, std::string("auto during ") + to_string(s.phase));
    std::vector<EdgeId> cand = s.pending->candidates.ids();
    if (cand.empty()) throw InternalError("no candidate to fix a flip");
    EdgeId pick = cand.front();
    if (cand.size() > 1) {
        if (s.policy == Policy::Random) {
            std::mt19937_64 rng(s.seed ^ (static_cast<uint64_t>(s.moves) * 0x9e3779b97f4a7c15ULL));
            std::uniform_int_distribution<std::size_t> dist(0, cand.size() - 1);
            pick = cand[dist(rng)];
        } else {
            int best = -1;
            EdgeSet all = s.host.edge_set();
            for (EdgeId f : cand) {
                EdgeSet blue = s.blue;
                blue.flip(f);
                int match = all.minus(blue ^ s.initial_S).size();
                if (match > best) {
                    best = match;
                    pick = f;
                }
            }
        }
    }
    return {pick, bob_fix(s, pick)};
}

std::optional<EdgeId> hint(const GameState& s) {
    if (s.phase != Phase::AliceTurn) return std::nullopt;
    TreePair tp = s.pair();
    if ((tp.S.minus(s.target_S())).size() > kMaxUecboHalf) return std::nullopt;
    auto path = find_forced_path(tp, s.target_S());
    if (!path || path->empty()) return std::nullopt;
    return path->front().e;
}

GameState undo(const GameState& s) {
    GameState out = s;
    if (s.pending) {
        out.blue.flip(s.pending->flipped);
        out.pending.reset();
        out.phase = Phase::AliceTurn;
        --out.moves;
        return out;
    }
    if (s.history.empty()) throw Error(ErrorKind::EmptyHistory, "nothing to undo");
    Round r = s.history.back();
    out.history.pop_back();
    out.blue.flip(r.alice);
    out.blue.flip(r.bob);
    out.moves -= 2;
    out.phase = Phase::AliceTurn;
    return out;
}

namespace {

nlohmann::json ids(const EdgeSet& s) { return s.ids(); }

}  // namespace

nlohmann::json to_json(const GameState& s) {
    nlohmann::json j;
    j["n"] = s.host.n();
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : s.host.edges())
        edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"color", s.blue.contains(e.id) ? "blue" : "red"}});
    j["edges"] = edges;
    j["phase"] = to_string(s.phase);
    if (s.pending) {
        j["pending"] = {{"edge", s.pending->flipped},
                        {"cycle", ids(s.pending->cycle)},
                        {"cut", ids(s.pending->cut)},
                        {"candidates", ids(s.pending->candidates)},
                        {"forced", s.pending->forced}};
    }
    nlohmann::json hist = nlohmann::json::array();
    for (const Round& r : s.history) hist.push_back({{"alice", r.alice}, {"bob", r.bob}});
    j["history"] = hist;
    j["won"] = s.won();
    j["target_distance"] = s.target_distance();
    j["policy"] = to_string(s.policy);
    j["moves"] = s.moves;
    return j;
}

}  // namespace bispan
