#include <cstdlib>
#include <set>
#include <thread>

#include "catch_amalgamated.hpp"
#include "httplib.h"

#include "bispan/catalog.hpp"
#include "bispan/service.hpp"

using namespace bispan;
using nlohmann::json;

namespace {

const char* kW5 =
    "5 8\n0 1 r\n2 1 b\n0 2 r\n4 2 r\n0 4 b\n3 4 r\n0 3 b\n1 3 b\n";

std::string create(GameApi& api, const json& req) {
    ApiResponse r = api.handle("POST", "/game", req.dump());
    REQUIRE(r.status == 201);
    return r.body["id"].get<std::string>();
}

ApiResponse post(GameApi& api, const std::string& path, const json& body = json::object()) {
    return api.handle("POST", path, body.dump());
}

}  // namespace

TEST_CASE("named graph listing", "[service]") {
    GameApi api(1);
    ApiResponse r = api.handle("GET", "/graphs/named", "");
    CHECK(r.status == 200);
    REQUIRE(r.body.is_array());
    CHECK(r.body.size() == catalog_names().size());
    bool b71 = false;
    for (const auto& e : r.body)
        if (e["name"] == "B7,1") {
            b71 = true;
            CHECK(e["n"] == 7);
            CHECK(e["m"] == 12);
        }
    CHECK(b71);
}

TEST_CASE("a session reflects posted moves", "[service]") {
    GameApi api(1);
    ApiResponse c = api.handle("POST", "/game", json{{"named", "K4"}}.dump());
    REQUIRE(c.status == 201);
    std::string id = c.body["id"];
    CHECK(id.size() == 32);
    CHECK(c.body["state"]["phase"] == "alice-turn");

    ApiResponse f = post(api, "/game/" + id + "/flip", {{"edge", 0}});
    REQUIRE(f.status == 200);
    CHECK(f.body["phase"] == "bob-must-fix");
    CHECK(f.body["pending"]["edge"] == 0);
    ApiResponse g = api.handle("GET", "/game/" + id, "");
    CHECK(g.body == f.body);

    if (f.body["pending"]["forced"] == true) {
        ApiResponse a = post(api, "/game/" + id + "/auto");
        REQUIRE(a.status == 200);
        CHECK(a.body["bob_edge"] == f.body["pending"]["candidates"][0]);
        CHECK(a.body["phase"] == "alice-turn");
    } else {
        EdgeId e = f.body["pending"]["candidates"][0];
        ApiResponse x = post(api, "/game/" + id + "/fix", {{"edge", e}});
        CHECK(x.status == 200);
    }
    ApiResponse u = post(api, "/game/" + id + "/undo");
    CHECK(u.status == 200);
    CHECK(u.body["history"].empty());
    CHECK(u.body["edges"] == c.body["state"]["edges"]);
}

TEST_CASE("replaying the W5 ordering over the API wins", "[service]") {
    GameApi api(1);
    std::string id = create(api, {{"graph", kW5}, {"policy", "manual"}});
    std::vector<std::pair<int, int>> moves{{0, 7}, {1, 3}, {2, 4}, {6, 5}};
    json last;
    for (auto [e, f] : moves) {
        ApiResponse a = post(api, "/game/" + id + "/flip", {{"edge", e}});
        REQUIRE(a.status == 200);
        CHECK(a.body["pending"]["forced"] == true);
        ApiResponse b = post(api, "/game/" + id + "/fix", {{"edge", f}});
        REQUIRE(b.status == 200);
        last = b.body;
    }
    CHECK(last["won"] == true);
    CHECK(last["phase"] == "won");
    CHECK(last["target_distance"] == 0);
    CHECK(last["history"].size() == 4);
}

TEST_CASE("hints over the API", "[service]") {
    GameApi api(1);
    std::string id = create(api, {{"graph", kW5}});
    ApiResponse h = api.handle("GET", "/game/" + id + "/hint", "");
    REQUIRE(h.status == 200);
    REQUIRE(h.body["edge"].is_number_integer());
    ApiResponse f = post(api, "/game/" + id + "/flip", {{"edge", h.body["edge"]}});
    CHECK(f.body["pending"]["forced"] == true);
}

TEST_CASE("API errors", "[service]") {
    GameApi api(1);
    std::string id = create(api, {{"named", "W5"}});
    std::string unknown(32, 'a');
    CHECK(api.handle("GET", "/game/" + unknown, "").status == 404);
    CHECK(api.handle("GET", "/nowhere", "").status == 404);
    CHECK(post(api, "/game/" + id + "/fix", {{"edge", 0}}).status == 409);
    CHECK(post(api, "/game/" + id + "/undo").status == 409);
    CHECK(post(api, "/game/" + id + "/flip", {{"edge", 99}}).status == 422);
    CHECK(post(api, "/game/" + id + "/flip", {{"edge", "x"}}).status == 400);
    CHECK(api.handle("POST", "/game/" + id + "/flip", "{not json").status == 400);
    CHECK(api.handle("POST", "/game/" + id, "").status == 405);
    CHECK(api.handle("GET", "/game/" + id + "/flip", "").status == 405);

    REQUIRE(post(api, "/game/" + id + "/flip", {{"edge", 0}}).status == 200);
    CHECK(post(api, "/game/" + id + "/flip", {{"edge", 1}}).status == 409);
    ApiResponse bad = post(api, "/game/" + id + "/fix", {{"edge", 0}});
    CHECK(bad.status == 422);
    CHECK(bad.body["error"] == "IllegalFix");

    CHECK(post(api, "/game", {{"named", "nope"}}).status == 422);
    CHECK(post(api, "/game", {{"graph", "3 3\n0 1\n1 2\n0 2\n"}}).status == 422);
    CHECK(post(api, "/game", {{"graph", "oops"}}).status == 400);
    CHECK(post(api, "/game", json::object()).status == 400);
    CHECK(post(api, "/game", {{"named", "K4"}, {"policy", "kind"}}).status == 400);
    CHECK(post(api, "/game", {{"named", "K4"}, {"seed", -3}}).status == 400);
}

TEST_CASE("policy and seed are stored per session", "[service]") {
    GameApi api(77);
    ApiResponse c = post(api, "/game", {{"named", "exchange-example"}, {"policy", "random"}, {"seed", 5}});
    REQUIRE(c.status == 201);
    CHECK(c.body["state"]["policy"] == "random");
    std::string id = c.body["id"];
    post(api, "/game/" + id + "/flip", {{"edge", 9}});
    EdgeId first = post(api, "/game/" + id + "/auto").body["bob_edge"];
    post(api, "/game/" + id + "/undo");
    post(api, "/game/" + id + "/flip", {{"edge", 9}});
    EdgeId again = post(api, "/game/" + id + "/auto").body["bob_edge"];
    CHECK(first == again);
}

TEST_CASE("session ids are unique hex", "[service]") {
    std::set<std::string> ids;
    for (int i = 0; i < 200; ++i) {
        std::string id = new_session_id();
        CHECK(id.size() == 32);
        CHECK(id.find_first_not_of("0123456789abcdef") == std::string::npos);
        ids.insert(id);
    }
    CHECK(ids.size() == 200);
}

TEST_CASE("BISPAN_SEED sets the default seed", "[service]") {
    setenv("BISPAN_SEED", "12345", 1);
    CHECK(default_seed() == 12345u);
    unsetenv("BISPAN_SEED");
}

TEST_CASE("concurrent sessions", "[service]") {
    GameApi api(1);
    std::vector<std::string> ids;
    for (int i = 0; i < 8; ++i) ids.push_back(create(api, {{"graph", kW5}, {"policy", "manual"}}));
    std::vector<std::thread> threads;
    std::vector<int> won(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i)
        threads.emplace_back([&, i] {
            std::vector<std::pair<int, int>> moves{{0, 7}, {1, 3}, {2, 4}, {6, 5}};
            json last;
            for (auto [e, f] : moves) {
                post(api, "/game/" + ids[i] + "/flip", {{"edge", e}});
                last = post(api, "/game/" + ids[i] + "/fix", {{"edge", f}}).body;
            }
            won[i] = last["won"] == true;
        });
    for (auto& t : threads) t.join();
    for (int w : won) CHECK(w == 1);
    CHECK(api.store().size() == ids.size());
}

TEST_CASE("HTTP server round trip", "[service]") {
    GameServer server(3);
    int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    std::thread t([&] { server.listen(); });
    httplib::Client cli("127.0.0.1", port);
    cli.set_connection_timeout(5);
    httplib::Result r;
    for (int i = 0; i < 50 && !(r = cli.Get("/graphs/named")); ++i)
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
    REQUIRE(r);
    CHECK(r->status == 200);
    CHECK(r->get_header_value("Access-Control-Allow-Origin") == "*");

    auto c = cli.Post("/game", json{{"named", "W5-uecbo"}, {"policy", "manual"}}.dump(), "application/json");
    REQUIRE(c);
    CHECK(c->status == 201);
    std::string id = json::parse(c->body)["id"];
    auto f = cli.Post("/game/" + id + "/flip", json{{"edge", 0}}.dump(), "application/json");
    REQUIRE(f);
    CHECK(json::parse(f->body)["pending"]["candidates"] == json::array({7}));
    auto g = cli.Get("/game/" + id);
    REQUIRE(g);
    CHECK(json::parse(g->body)["phase"] == "bob-must-fix");
    auto missing = cli.Get("/game/" + std::string(32, '0'));
    REQUIRE(missing);
    CHECK(missing->status == 404);
    auto opt = cli.Options("/game");
    REQUIRE(opt);
    CHECK(opt->status == 204);

    server.stop();
    t.join();
}
