#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "torfold/explorer.hpp"

using namespace torfold;
using namespace torfold::explorer;

namespace {

std::string create_id(SessionStore& store, const json& req) {
  Reply r = store.create(req);
  REQUIRE(r.status == 201);
  return r.body["id"].get<std::string>();
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(TORFOLD_CLI) + " " + args;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, p)) out.append(buf, got);
  pclose(p);
  return out;
}

struct LiveServer {
  SessionStore store;
  Server server{store};
  int port = -1;
  std::thread worker;

  LiveServer() {
    port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    worker = std::thread([this] { server.listen(); });
    while (!server.running()) std::this_thread::yield();
  }
  ~LiveServer() {
    server.stop();
    worker.join();
  }
};

}  // namespace

TEST_SUITE("explorer-service") {
  TEST_CASE("presets") {
    SessionStore store;
    Reply r = store.create({{"preset", "gammaInfinity"}, {"n", 3}});
    CHECK(r.status == 201);
    CHECK(r.body["state"]["periodic"]["sites"].size() == 12);
    CHECK(r.body["admissible"] == true);
    CHECK(store.create({{"preset", "cyclic3"}}).status == 201);
    CHECK(store.create({{"preset", "hexagon"}}).status == 201);
    CHECK(store.create({{"preset", "aq"}, {"cycle", io::to_json(cyclic3_quiver())}}).status == 201);
    CHECK(store.create({{"preset", "nope"}}).status == 400);
    CHECK(store.create({{"preset", "gammaInfinity"}, {"n", 0}}).status == 400);
    CHECK(store.presets().body.size() == 4);
  }

  TEST_CASE("inadmissible quiver is refused with its violations") {
    SessionStore store;
    json loop{{"period", 1},
              {"sites", {{{"id", 0}, {"frozen", false}}}},
              {"arrows", {{{"from", 0}, {"to", 0}, {"shift", 1}, {"mult", 1}}}}};
    Reply r = store.create({{"periodic", loop}});
    CHECK(r.status == 422);
    CHECK(r.body["violations"][0]["condition"] == "virtual-loop");
    CHECK(store.size() == 0);
  }

  TEST_CASE("mutate, conflict, undo") {
    SessionStore store;
    std::string g = create_id(store, {{"preset", "gammaInfinity"}, {"n", 2}});
    Reply before = store.get(g);
    Reply m = store.mutate(g, {{"orbit", 0}});
    CHECK(m.status == 200);
    CHECK(m.body["state"]["history"] == json::array({0}));
    CHECK(m.body["cluster_rendered"][0] != before.body["cluster_rendered"][0]);
    CHECK(store.mutate(g, {{"orbit", 5}}).status == 400);  // frozen partner of 1
    CHECK(store.mutate(g, {{"orbit", 99}}).status == 400);
    CHECK(store.mutate(g, {{"site", 0}}).status == 400);
    Reply u = store.undo(g);
    CHECK(u.status == 200);
    CHECK(u.body == before.body);
    CHECK(store.undo(g).status == 409);

    std::string c = create_id(store, {{"preset", "cyclic3"}});
    Reply start = store.get(c);
    Reply bad = store.mutate(c, {{"orbit", 0}});
    CHECK(bad.status == 409);
    CHECK(bad.body["witness"]["violations"][0]["sites"] == json::array({1, 2}));
    CHECK(store.get(c).body == start.body);

    CHECK(store.get("missing").status == 404);
    CHECK(store.mutate("missing", {{"orbit", 0}}).status == 404);
    CHECK(store.fold("missing").status == 404);
  }

  TEST_CASE("fold endpoint matches fold_orbit_seed") {
    SessionStore store;
    std::string g = create_id(store, {{"preset", "gammaInfinity"}, {"n", 2}});
    store.mutate(g, {{"orbit", 1}});
    OrbitSeed os = orbit_mutate_seed(initial_orbit_seed(build_gamma_infinity(2)), 1);
    json folded = store.fold(g).body;
    CHECK(io::seed_from_json(folded) == fold_orbit_seed(os));
  }

  TEST_CASE("snapshots") {
    auto dir = std::filesystem::temp_directory_path() / "torfold-snapshots-test";
    std::filesystem::remove_all(dir);
    SessionStore store(dir.string());
    std::string g = create_id(store, {{"preset", "gammaInfinity"}, {"n", 1}});
    store.mutate(g, {{"orbit", 0}});
    json snap = io::read_file((dir / (g + ".json")).string());
    CHECK(snap["state"]["history"] == json::array({0}));
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("session ids are unique") {
    SessionStore store;
    std::set<std::string> ids;
    for (int i = 0; i < 50; ++i) ids.insert(create_id(store, {{"preset", "gammaInfinity"}, {"n", 1}}));
    CHECK(ids.size() == 50);
  }

  TEST_CASE("concurrent mutations on one session serialize") {
    SessionStore store;
    std::string g = create_id(store, {{"preset", "gammaInfinity"}, {"n", 2}});
    std::vector<std::thread> ts;
    for (int t = 0; t < 4; ++t)
      ts.emplace_back([&, t] {
        for (int i = 0; i < 2; ++i) store.mutate(g, {{"orbit", (t + i) % 4}});
      });
    for (auto& t : ts) t.join();
    json state = store.get(g).body["state"];
    CHECK(state["history"].size() == 8);
    std::vector<int> hist = state["history"].get<std::vector<int>>();
    OrbitSeed os = initial_orbit_seed(build_gamma_infinity(2));
    for (int k : hist) os = orbit_mutate_seed(os, k);
    CHECK(io::to_json(os) == state);
  }

  TEST_CASE("HTTP round trip") {
    LiveServer live;
    httplib::Client cli("127.0.0.1", live.port);
    auto presets = cli.Get("/presets");
    REQUIRE(presets);
    CHECK(presets->status == 200);
    auto made = cli.Post("/sessions", R"({"preset":"gammaInfinity","n":2})", "application/json");
    REQUIRE(made);
    CHECK(made->status == 201);
    std::string id = io::parse(made->body)["id"];
    for (int k : {0, 1, 2}) {
      auto r = cli.Post("/sessions/" + id + "/mutate", json{{"orbit", k}}.dump(), "application/json");
      REQUIRE(r);
      CHECK(r->status == 200);
    }
    auto undo = cli.Post("/sessions/" + id + "/undo", "", "application/json");
    REQUIRE(undo);
    CHECK(io::parse(undo->body)["state"]["history"] == json::array({0, 1}));
    auto fold = cli.Get("/sessions/" + id + "/fold");
    REQUIRE(fold);
    CHECK(fold->status == 200);
    CHECK(cli.Get("/sessions/nope")->status == 404);
    CHECK(cli.Post("/sessions", "{oops", "application/json")->status == 400);

    auto cyc = cli.Post("/sessions", R"({"preset":"cyclic3"})", "application/json");
    std::string cid = io::parse(cyc->body)["id"];
    auto before = cli.Get("/sessions/" + cid)->body;
    auto conflict = cli.Post("/sessions/" + cid + "/mutate", R"({"orbit":0})", "application/json");
    CHECK(conflict->status == 409);
    CHECK(io::parse(conflict->body)["witness"]["violations"][0]["sites"] == json::array({1, 2}));
    CHECK(cli.Get("/sessions/" + cid)->body == before);
  }

  TEST_CASE("replaying the history through the CLI gives identical JSON") {
    SessionStore store;
    std::string g = create_id(store, {{"preset", "gammaInfinity"}, {"n", 2}});
    for (int k : {0, 3, 1, 0, 2}) REQUIRE(store.mutate(g, {{"orbit", k}}).status == 200);
    std::string cli = run_cli("orbit-mutate --n 2 --seq 0,3,1,0,2");
    CHECK(cli == io::dump(store.get(g).body["state"]));

    std::string f = create_id(store, {{"preset", "hexagon"}});
    for (int k : {1, 4, 2}) REQUIRE(store.mutate(f, {{"orbit", k}}).status == 200);
    CHECK(run_cli(std::string("orbit-mutate --cycle ") + TORFOLD_DATA + "/hexagon.json --seq 1,4,2") ==
          io::dump(store.get(f).body["state"]));
  }
}
