#include "bispan/service.hpp"

#include <cstdlib>
#include <random>
#include <regex>

#include "httplib.h"

#include "bispan/catalog.hpp"
#include "bispan/io.hpp"

namespace bispan {

std::string new_session_id() {
    std::random_device rd;
    static const char* hex = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 4; ++i) {
        uint32_t w = rd();
        for (int k = 0; k < 8; ++k) id.push_back(hex[(w >> (4 * k)) & 15]);
    }
    return id;
}

uint64_t default_seed() {
    if (const char* s = std::getenv("BISPAN_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && end != s) return v;
    }
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) | rd();
}

std::string SessionStore::create(GameState s) {
    auto session = std::make_shared<Session>();
    session->state = std::move(s);
    std::lock_guard lock(m_);
    std::string id;
    do id = new_session_id();
    while (sessions_.count(id));
    sessions_.emplace(id, std::move(session));
    return id;
}

bool SessionStore::with(const std::string& id, const std::function<void(GameState&)>& f) {
    std::shared_ptr<Session> s;
    {
        std::lock_guard lock(m_);
        auto it = sessions_.find(id);
        if (it == sessions_.end()) return false;
        s = it->second;
    }
    std::lock_guard lock(s->m);
    f(s->state);
    return true;
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(m_);
    return sessions_.size();
}

namespace {

ApiResponse error(int status, const std::string& kind, const std::string& msg) {
    return {status, {{"error", kind}, {"message", msg}}};
}

int status_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::WrongPhase:
    case ErrorKind::EmptyHistory: return 409;
    case ErrorKind::Parse: return 400;
    default: return 422;
    }
}

EdgeId edge_field(const nlohmann::json& req) {
    if (!req.contains("edge") || !req["edge"].is_number_integer()) throw Error(ErrorKind::Parse, "body needs an integer 'edge'");
    return req["edge"].get<EdgeId>();
}

}  // namespace

ApiResponse GameApi::create(const nlohmann::json& req) {
    TreePair tp;
    if (req.contains("named")) {
        if (!req["named"].is_string()) throw Error(ErrorKind::Parse, "'named' must be a string");
        tp = named_graph(req["named"].get<std::string>()).pair;
    } else if (req.contains("graph")) {
        if (!req["graph"].is_string()) throw Error(ErrorKind::Parse, "'graph' must be edge-list text");
        ColoredGraph cg = parse_edge_list(req["graph"].get<std::string>());
        tp = make_pair_from(cg.graph, cg.colors);
        if (!tp.valid()) {
            auto found = find_two_trees(cg.graph);
            if (!found) throw Error(ErrorKind::NotBispanning, "graph has no pair of disjoint spanning trees");
            tp = *found;
        }
    } else {
        throw Error(ErrorKind::Parse, "body needs 'graph' or 'named'");
    }
    Policy policy = req.contains("policy") ? parse_policy(req.value("policy", "")) : Policy::Adversarial;
    uint64_t seed = seed_;
    if (req.contains("seed")) {
        if (!req["seed"].is_number_unsigned()) throw Error(ErrorKind::Parse, "'seed' must be a non-negative integer");
        seed = req["seed"].get<uint64_t>();
    }
    GameState s = new_game(tp, policy, seed);
    nlohmann::json state = to_json(s);
    std::string id = store_.create(std::move(s));
    return {201, {{"id", id}, {"state", state}}};
}

ApiResponse GameApi::handle(const std::string& method, const std::string& path, const std::string& body) {
    static const std::regex game_re(R"(^/game/([0-9a-f]{32})(/(flip|fix|auto|undo|hint))?$)");
    try {
        nlohmann::json req = nlohmann::json::object();
        if (method == "POST" && !body.empty()) {
            req = nlohmann::json::parse(body, nullptr, false);
            if (req.is_discarded() || !req.is_object()) return error(400, "Parse", "body is not a JSON object");
        }
        if (path == "/graphs/named" && method == "GET") return {200, catalog_json()};
        if (path == "/game" && method == "POST") return create(req);

        std::smatch m;
        if (!std::regex_match(path, m, game_re)) return error(404, "NotFound", "no route " + method + " " + path);
        std::string id = m[1];
        std::string action = m[3];
        bool get = method == "GET";
        if ((action.empty() || action == "hint") != get) return error(405, "MethodNotAllowed", method + " " + path);

        ApiResponse resp;
        bool found = store_.with(id, [&](GameState& s) {
            if (action.empty()) {
                resp.body = to_json(s);
            } else if (action == "hint") {
                auto h = hint(s);
                resp.body = {{"edge", h ? nlohmann::json(*h) : nlohmann::json(nullptr)}};
            } else if (action == "flip") {
                s = alice_flip(s, edge_field(req));
                resp.body = to_json(s);
            } else if (action == "fix") {
                s = bob_fix(s, edge_field(req));
                resp.body = to_json(s);
            } else if (action == "auto") {
                auto [f, next] = bob_auto(s);
                s = std::move(next);
                resp.body = to_json(s);
                resp.body["bob_edge"] = f;
            } else if (action == "undo") {
                s = undo(s);
                resp.body = to_json(s);
            }
        });
        if (!found) return error(404, "UnknownSession", "no session " + id);
        return resp;
    } catch (const Error& e) {
        return error(status_of(e.kind()), to_string(e.kind()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return error(400, "Parse", e.what());
    } catch (const std::exception& e) {
        return error(500, "Internal", e.what());
    }
}

struct GameServer::Impl {
    httplib::Server server;
};

GameServer::GameServer(uint64_t default_seed) : api_(default_seed), impl_(std::make_unique<Impl>()) {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
        ApiResponse r = api_.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body.dump(), "application/json");
    };
    impl_->server.Get(".*", route);
    impl_->server.Post(".*", route);
    impl_->server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.status = 204;
    });
}

GameServer::~GameServer() { stop(); }

int GameServer::bind(const std::string& host, int port) {
    if (port == 0) return impl_->server.bind_to_any_port(host);
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

void GameServer::listen() { impl_->server.listen_after_bind(); }

void GameServer::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace bispan
