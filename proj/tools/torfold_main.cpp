#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "torfold/explorer.hpp"
#include "torfold/suites.hpp"

using namespace torfold;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Inputs {
  std::string quiver, periodic, cycle, seq, suite = "involution", window, root, out, host = "127.0.0.1", snapshots;
  int n = 0;
  int depth = 3;
  int trials = 100;
  std::uint64_t seed = 42;
  int port = 8080;
  bool timings = false;
};

std::vector<std::string> split_seq(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InputError("not an integer: \"" + s + "\"");
  return v;
}

std::pair<int, int> parse_window(const std::string& s) {
  auto colon = s.find(':', s.front() == '-' ? 1 : 0);
  if (colon == std::string::npos) throw InputError("expected a:b, got \"" + s + "\"");
  return {to_int(s.substr(0, colon)), to_int(s.substr(colon + 1))};
}

void emit(const Inputs& in, const json& j) {
  if (in.out.empty()) std::cout << io::dump(j);
  else io::write_file(in.out, j);
}

PeriodicQuiver periodic_input(const Inputs& in) {
  if (!in.periodic.empty()) return io::periodic_quiver_from_json(io::read_file(in.periodic));
  if (!in.cycle.empty()) return build_AQ(io::ice_quiver_from_json(io::read_file(in.cycle)));
  if (in.n > 0) return build_gamma_infinity(in.n);
  throw InputError("give --periodic, --cycle or --n");
}

int run_mutate(const Inputs& in) {
  if (in.quiver.empty()) throw InputError("mutate needs --quiver");
  Seed s = initial_seed(io::ice_quiver_from_json(io::read_file(in.quiver)));
  for (const auto& z : split_seq(in.seq)) s = mutate_seed(s, z);
  emit(in, io::to_json(s));
  return kPass;
}

OrbitSeed replay(const PeriodicQuiver& pq, const std::string& seq) {
  OrbitSeed os = initial_orbit_seed(pq);
  for (const auto& k : split_seq(seq)) {
    const int K = to_int(k);
    if (K < 0 || K >= os.pquiver.size()) throw InputError("no site " + k);
    os = orbit_mutate_seed(os, K);
  }
  return os;
}

int run_orbit_mutate(const Inputs& in) {
  emit(in, io::to_json(replay(periodic_input(in), in.seq)));
  return kPass;
}

int run_fold(const Inputs& in) {
  Seed s = fold_orbit_seed(replay(periodic_input(in), in.seq));
  json j = io::to_json(s);
  std::vector<std::string> r;
  for (const auto& x : s.cluster) r.push_back(to_string(x));
  j["cluster_rendered"] = r;
  emit(in, j);
  return kPass;
}

int run_cluster(const Inputs& in) {
  if (in.root.empty()) throw InputError("cluster needs --root i:j or --root -i");
  RootInterval root = in.root.front() == '-' && in.root.find(':', 1) == std::string::npos
                          ? RootInterval::negative_simple(to_int(in.root.substr(1)))
                          : [&] {
                              auto [i, j] = parse_window(in.root);
                              return RootInterval::positive(i, j);
                            }();
  auto [lo, hi] = in.window.empty() ? std::pair{root.i - 2, root.j + 2} : parse_window(in.window);
  LaurentPoly x = find_cluster_variable(gamma_window(lo, hi), root);
  emit(in, {{"root", to_string(root)}, {"window", {lo, hi}}, {"variable", io::to_json(x)}, {"rendered", to_string(x)}});
  return kPass;
}

int run_verify(const Inputs& in) {
  SuiteConfig cfg;
  cfg.suite = in.suite;
  cfg.n = in.n > 0 ? in.n : 3;
  cfg.depth = in.depth;
  cfg.trials = in.trials;
  cfg.seed = in.seed;
  cfg.timings = in.timings;
  if (!in.window.empty()) cfg.window = parse_window(in.window);
  if (!in.cycle.empty()) cfg.cycle = io::ice_quiver_from_json(io::read_file(in.cycle));
  if (!in.periodic.empty()) cfg.periodic = io::periodic_quiver_from_json(io::read_file(in.periodic));
  SuiteResult r = run_suite(cfg);
  if (in.out.empty()) {
    std::cerr << r.summary << (r.passed ? " [pass]" : " [FAIL]") << "\n";
    std::cout << io::dump(r.report);
  } else {
    io::write_file(in.out, r.report);
    std::cout << r.summary << (r.passed ? " [pass]" : " [FAIL]") << "\n";
  }
  return r.passed ? kPass : kFail;
}

explorer::Server* g_server = nullptr;

int run_serve(const Inputs& in) {
  explorer::SessionStore store(in.snapshots);
  explorer::Server server(store);
  const int port = server.bind(in.host, in.port);
  if (port < 0) {
    spdlog::error("cannot bind {}:{}", in.host, in.port);
    return kUsage;
  }
  g_server = &server;
  std::signal(SIGINT, [](int) {
    if (g_server) g_server->stop();
  });
  std::signal(SIGTERM, [](int) {
    if (g_server) g_server->stop();
  });
  std::cout << "listening on http://" << in.host << ":" << port << std::endl;
  server.listen();
  g_server = nullptr;
  return kPass;
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("torfold");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* lvl = std::getenv("TORFOLD_LOG")) spdlog::set_level(spdlog::level::from_str(lvl));
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"Orbit-mutation, folding and verification tools for periodic quivers"};
  app.require_subcommand(1);
  Inputs in;

  auto* mutate = app.add_subcommand("mutate", "mutate an ice quiver seed along a sequence of vertex ids");
  mutate->add_option("--quiver", in.quiver, "ice quiver JSON")->required();
  mutate->add_option("--seq", in.seq, "comma-separated vertex ids");
  mutate->add_option("--out", in.out);

  auto periodic_opts = [&](CLI::App* c) {
    c->add_option("--periodic", in.periodic, "periodic quiver JSON");
    c->add_option("--cycle", in.cycle, "ice quiver JSON of a cycle, unfolded to A_Q");
    c->add_option("--n", in.n, "Γ_∞(n) when no file is given");
    c->add_option("--seq", in.seq, "comma-separated orbit sites");
    c->add_option("--out", in.out);
  };
  auto* orbit = app.add_subcommand("orbit-mutate", "orbit-mutate a periodic quiver seed");
  periodic_opts(orbit);
  auto* fold_cmd = app.add_subcommand("fold", "fold a (mutated) orbit seed");
  periodic_opts(fold_cmd);

  auto* cluster = app.add_subcommand("cluster", "cluster variable of an almost positive root in a Γ_∞ window");
  cluster->add_option("--root", in.root, "i:j or -i")->required();
  cluster->add_option("--window", in.window, "a:b");
  cluster->add_option("--out", in.out);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", in.suite)->required();
  verify->add_option("--n", in.n);
  verify->add_option("--depth", in.depth);
  verify->add_option("--trials", in.trials);
  verify->add_option("--seed", in.seed);
  verify->add_option("--window", in.window, "a:b");
  verify->add_option("--cycle", in.cycle);
  verify->add_option("--periodic", in.periodic);
  verify->add_option("--out", in.out);
  verify->add_flag("--timings", in.timings, "include elapsed time in the report");

  auto* serve = app.add_subcommand("serve", "run the explorer service");
  serve->add_option("--port", in.port);
  serve->add_option("--host", in.host);
  serve->add_option("--snapshots", in.snapshots, "directory for session snapshots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (*mutate) return run_mutate(in);
    if (*orbit) return run_orbit_mutate(in);
    if (*fold_cmd) return run_fold(in);
    if (*cluster) return run_cluster(in);
    if (*verify) return run_verify(in);
    if (*serve) return run_serve(in);
  } catch (const FoldabilityViolationError& e) {
    std::cerr << e.what() << "\n";
    std::cout << io::dump({{"witness", {{"sequence", e.sequence()}, {"violations", io::to_json(e.violations())}}}});
    return kFail;
  } catch (const FoldingError& e) {
    std::cerr << e.what() << "\n";
    std::cout << io::dump({{"violations", io::to_json(e.violations())}});
    return kFail;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MutationAtFrozenError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
