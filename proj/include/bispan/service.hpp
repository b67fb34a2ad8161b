#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "json.hpp"

#include "bispan/game.hpp"

namespace bispan {

// session id -> game; lookups are serialized by the store, moves by a per-session mutex
class SessionStore {
public:
    std::string create(GameState s);
    // runs f on the session under its lock; false if the id is unknown
    bool with(const std::string& id, const std::function<void(GameState&)>& f);
    std::size_t size() const;

private:
    struct Session {
        std::mutex m;
        GameState state;
    };
    mutable std::mutex m_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
};

// 32 hex digits from the system random device
std::string new_session_id();

// BISPAN_SEED if set and numeric, else a random value
uint64_t default_seed();

struct ApiResponse {
    int status = 200;
    nlohmann::json body;
};

// the HTTP JSON API without the socket layer
class GameApi {
public:
    explicit GameApi(uint64_t default_seed) : seed_(default_seed) {}
    ApiResponse handle(const std::string& method, const std::string& path, const std::string& body);
    SessionStore& store() { return store_; }

private:
    ApiResponse create(const nlohmann::json& req);
    uint64_t seed_;
    SessionStore store_;
};

// blocks until stop() is called from another thread or the process ends
class GameServer {
public:
    explicit GameServer(uint64_t default_seed);
    ~GameServer();
    // port 0 picks a free port; returns the bound port or -1
    int bind(const std::string& host, int port);
    void listen();
    void stop();
    GameApi& api() { return api_; }

private:
    struct Impl;
    GameApi api_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace bispan
