#include "torfold/explorer.hpp"

#include <spdlog/spdlog.h>

#include <filesystem>
#include <random>

#include "httplib.h"

namespace torfold::explorer {

namespace {

json error_body(const std::string& message) { return {{"error", message}}; }

std::vector<std::string> rendered(const std::vector<LaurentPoly>& cluster) {
  std::vector<std::string> out;
  for (const auto& x : cluster) out.push_back(to_string(x));
  return out;
}

IceQuiver numbered_cycle(const std::vector<std::pair<int, int>>& arrows, int n, int first) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back({std::to_string(first + i), false});
  std::vector<Arrow> as;
  for (auto [a, b] : arrows) as.push_back({std::to_string(a), std::to_string(b), 1});
  return IceQuiver(vs, as);
}

}  // namespace

IceQuiver cyclic3_quiver() { return numbered_cycle({{0, 1}, {1, 2}, {2, 0}}, 3, 0); }

IceQuiver hexagon_quiver() { return numbered_cycle({{1, 2}, {2, 3}, {3, 4}, {1, 6}, {6, 5}, {5, 4}}, 6, 1); }

json preset_catalogue() {
  return json::array({
      {{"name", "gammaInfinity"}, {"params", {{"n", "integer >= 1"}}}},
      {{"name", "aq"}, {"params", {{"cycle", "ice quiver JSON of an oriented cycle"}}}},
      {{"name", "cyclic3"}, {"params", json::object()}},
      {{"name", "hexagon"}, {"params", json::object()}},
  });
}

std::pair<std::string, PeriodicQuiver> resolve_initial(const json& request) {
  if (!request.is_object()) throw InputError("request body must be a JSON object");
  if (request.contains("periodic")) return {"periodic", io::periodic_quiver_from_json(request.at("periodic"))};
  if (!request.contains("preset")) throw InputError("expected \"preset\" or \"periodic\"");
  const json& p = request.at("preset");
  if (!p.is_string()) throw InputError("preset must be a string");
  const std::string name = p.get<std::string>();
  if (name == "gammaInfinity") {
    const json& n = request.value("n", json(2));
    if (!n.is_number_integer() || n.get<int>() < 1) throw InputError("gammaInfinity needs an integer n >= 1");
    return {name, build_gamma_infinity(n.get<int>())};
  }
  if (name == "aq") {
    if (!request.contains("cycle")) throw InputError("aq needs a \"cycle\" quiver");
    return {name, build_AQ(io::ice_quiver_from_json(request.at("cycle")))};
  }
  if (name == "cyclic3") return {name, build_AQ(cyclic3_quiver())};
  if (name == "hexagon") return {name, build_AQ(hexagon_quiver())};
  throw InputError("unknown preset \"" + name + "\"");
}

SessionStore::SessionStore(std::string snapshot_dir) : snapshot_dir_(std::move(snapshot_dir)) {
  salt_ = std::random_device{}();
  salt_ = (salt_ << 32) ^ std::random_device{}();
  if (!snapshot_dir_.empty()) std::filesystem::create_directories(snapshot_dir_);
}

std::string SessionStore::fresh_id() {
  std::mt19937_64 mix(salt_ + ++counter_);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(mix()));
  return buf;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json SessionStore::summary(Session& s) const {
  if (!s.folded) s.folded = fold_orbit_seed(s.seed);
  auto adm = admissibility_check(s.seed.pquiver);
  return {{"id", s.id},
          {"preset", s.preset},
          {"state", io::to_json(s.seed)},
          {"cluster_rendered", rendered(s.seed.cluster)},
          {"folded", io::to_json(s.folded->quiver)},
          {"admissible", adm.admissible},
          {"violations", io::to_json(adm.violations)},
          {"undo_depth", s.undo.size()}};
}

void SessionStore::snapshot(const Session& s) const {
  if (snapshot_dir_.empty()) return;
  json j{{"id", s.id}, {"preset", s.preset}, {"state", io::to_json(s.seed)}};
  io::write_file((std::filesystem::path(snapshot_dir_) / (s.id + ".json")).string(), j);
}

Reply SessionStore::create(const json& request) {
  std::pair<std::string, PeriodicQuiver> init;
  try {
    init = resolve_initial(request);
  } catch (const InputError& e) {
    return {400, error_body(e.what())};
  }
  auto adm = admissibility_check(init.second);
  if (!adm.admissible) {
    json body = error_body("quiver is not strongly admissible");
    body["violations"] = io::to_json(adm.violations);
    return {422, body};
  }
  auto s = std::make_shared<Session>();
  s->preset = init.first;
  s->seed = initial_orbit_seed(init.second);
  {
    std::lock_guard lock(mu_);
    do s->id = fresh_id();
    while (sessions_.count(s->id));
    sessions_[s->id] = s;
  }
  std::lock_guard lock(s->mu);
  snapshot(*s);
  spdlog::debug("session {} created from {}", s->id, s->preset);
  return {201, summary(*s)};
}

Reply SessionStore::get(const std::string& id) {
  auto s = find(id);
  if (!s) return {404, error_body("unknown session " + id)};
  std::lock_guard lock(s->mu);
  return {200, summary(*s)};
}

Reply SessionStore::mutate(const std::string& id, const json& request) {
  auto s = find(id);
  if (!s) return {404, error_body("unknown session " + id)};
  if (!request.is_object() || !request.contains("orbit") || !request.at("orbit").is_number_integer())
    return {400, error_body("expected {\"orbit\": <site>}")};
  const int K = request.at("orbit").get<int>();
  std::lock_guard lock(s->mu);
  if (K < 0 || K >= s->seed.pquiver.size()) return {400, error_body("no site " + std::to_string(K))};
  if (s->seed.pquiver.is_frozen(K)) return {400, error_body("site " + std::to_string(K) + " is frozen")};
  try {
    OrbitSeed next = orbit_mutate_seed(s->seed, K);
    s->undo.push_back(std::move(s->seed));
    s->seed = std::move(next);
    s->folded.reset();
  } catch (const FoldabilityViolationError& e) {
    json body = error_body(e.what());
    body["witness"] = {{"sequence", e.sequence()}, {"violations", io::to_json(e.violations())}};
    spdlog::debug("session {}: orbit {} refused", id, K);
    return {409, body};
  } catch (const OverflowError& e) {
    return {422, error_body(e.what())};
  }
  snapshot(*s);
  return {200, summary(*s)};
}

Reply SessionStore::undo(const std::string& id) {
  auto s = find(id);
  if (!s) return {404, error_body("unknown session " + id)};
  std::lock_guard lock(s->mu);
  if (s->undo.empty()) return {409, error_body("nothing to undo")};
  s->seed = std::move(s->undo.back());
  s->undo.pop_back();
  s->folded.reset();
  snapshot(*s);
  return {200, summary(*s)};
}

Reply SessionStore::fold(const std::string& id) {
  auto s = find(id);
  if (!s) return {404, error_body("unknown session " + id)};
  std::lock_guard lock(s->mu);
  if (!s->folded) s->folded = fold_orbit_seed(s->seed);
  json body = io::to_json(*s->folded);
  body["cluster_rendered"] = rendered(s->folded->cluster);
  return {200, body};
}

Server::Server(SessionStore& store) : store_(store), http_(std::make_unique<httplib::Server>()) {
  auto send = [](httplib::Response& res, const Reply& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto body_of = [](const httplib::Request& req) -> std::optional<json> {
    if (req.body.empty()) return json::object();
    try {
      return io::parse(req.body);
    } catch (const InputError&) {
      return std::nullopt;
    }
  };
  auto bad_json = Reply{400, error_body("request body is not valid JSON")};

  http_->Get("/presets", [this, send](const httplib::Request&, httplib::Response& res) { send(res, store_.presets()); });
  http_->Post("/sessions", [=, this](const httplib::Request& req, httplib::Response& res) {
    auto b = body_of(req);
    send(res, b ? store_.create(*b) : bad_json);
  });
  http_->Get(R"(/sessions/([^/]+))", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store_.get(req.matches[1]));
  });
  http_->Post(R"(/sessions/([^/]+)/mutate)", [=, this](const httplib::Request& req, httplib::Response& res) {
    auto b = body_of(req);
    send(res, b ? store_.mutate(req.matches[1], *b) : bad_json);
  });
  http_->Post(R"(/sessions/([^/]+)/undo)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store_.undo(req.matches[1]));
  });
  http_->Get(R"(/sessions/([^/]+)/fold)", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, store_.fold(req.matches[1]));
  });
  http_->set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    spdlog::error("request failed: {}", what);
    res.status = 500;
    res.set_content(error_body(what).dump(), "application/json");
  });
  http_->set_logger([](const httplib::Request& req, const httplib::Response& res) {
    spdlog::debug("{} {} -> {}", req.method, req.path, res.status);
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return http_->bind_to_any_port(host);
  return http_->bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return http_->listen_after_bind(); }

void Server::stop() {
  if (http_->is_running()) http_->stop();
}

bool Server::running() const { return http_->is_running(); }

}  // namespace torfold::explorer
