#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "torfold/json_io.hpp"

namespace httplib {
class Server;
}

namespace torfold::explorer {

using io::json;

/// Outcome of a store call: HTTP status and JSON body.
struct Reply {
  int status = 200;
  json body;
};

struct Session {
  std::mutex mu;
  std::string id;
  std::string preset;
  OrbitSeed seed;
  std::vector<OrbitSeed> undo;
  std::optional<Seed> folded;  // cache of fold_orbit_seed(seed)
};

/// Named presets: gammaInfinity (n), aq (cycle), cyclic3, hexagon.
json preset_catalogue();
/// Periodic quiver for a create request; throws InputError on bad requests.
std::pair<std::string, PeriodicQuiver> resolve_initial(const json& request);

IceQuiver cyclic3_quiver();
IceQuiver hexagon_quiver();

/// In-memory sessions. Calls on one session are serialized by its mutex;
/// distinct sessions proceed independently.
class SessionStore {
 public:
  /// When snapshot_dir is non-empty every state change is written to
  /// <snapshot_dir>/<id>.json.
  explicit SessionStore(std::string snapshot_dir = {});

  Reply create(const json& request);
  Reply get(const std::string& id);
  Reply mutate(const std::string& id, const json& request);
  Reply undo(const std::string& id);
  Reply fold(const std::string& id);
  Reply presets() const { return {200, preset_catalogue()}; }
  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  json summary(Session& s) const;
  void snapshot(const Session& s) const;
  std::string fresh_id();

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::string snapshot_dir_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_ = 0;
};

/// HTTP front end on localhost.
class Server {
 public:
  explicit Server(SessionStore& store);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();
  bool running() const;

 private:
  SessionStore& store_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace torfold::explorer
