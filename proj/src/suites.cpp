#include "torfold/suites.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace torfold {

namespace {

using io::json;
using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

struct Tally {
  std::size_t checks = 0;
  json failures = json::array();

  void check(bool ok, json detail) {
    ++checks;
    if (!ok) failures.push_back(std::move(detail));
  }
  bool passed() const { return failures.empty(); }
};

json base_report(const SuiteConfig& cfg, const Tally& t) {
  return {{"suite", cfg.suite},
          {"config", {{"n", cfg.n}, {"depth", cfg.depth}, {"trials", cfg.trials}, {"seed", cfg.seed}}},
          {"status", t.passed() ? "pass" : "fail"},
          {"checks", t.checks},
          {"failures", t.failures}};
}

bool ice_involution(const IceQuiver& q, std::size_t z) { return mutate_at(mutate_at(q, z), z) == q; }

SuiteResult involution(const SuiteConfig& cfg) {
  Tally t;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t s = cfg.seed + static_cast<std::uint64_t>(trial);
    IceQuiver q = random_ice_quiver(s);
    for (std::size_t z = 0; z < q.size(); ++z) {
      if (q.is_frozen(z)) continue;
      t.check(ice_involution(q, z), {{"trial", trial}, {"quiver", io::to_json(q)}, {"vertex", q.vertex(z).id}});
      for (std::size_t w = z + 1; w < q.size(); ++w) {
        if (q.is_frozen(w) || q.arrows(z, w) || q.arrows(w, z)) continue;
        t.check(mutate_at(mutate_at(q, z), w) == mutate_at(mutate_at(q, w), z),
                {{"trial", trial}, {"quiver", io::to_json(q)}, {"commute", {q.vertex(z).id, q.vertex(w).id}}});
      }
    }
  }
  // orbit-mutation on Γ_∞(n)
  PeriodicQuiver g = build_gamma_infinity(cfg.n);
  for (int K = 0; K < 2 * cfg.n; ++K)
    t.check(orbit_mutate(orbit_mutate(g, K), K) == g, {{"orbit", K}});
  SuiteResult r;
  r.passed = t.passed();
  r.report = base_report(cfg, t);
  r.summary = "involution: " + std::to_string(t.checks) + " checks, " + std::to_string(t.failures.size()) + " failures";
  return r;
}

json foldability_case(const SuiteConfig& cfg, const PeriodicQuiver& pq, std::optional<bool> expect_violation,
                      Tally& t, const std::string& label) {
  FoldabilityResult res = foldability_search(pq, cfg.depth);
  json out{{"input", label}, {"search", io::to_json(res)}};
  if (expect_violation) {
    out["expected"] = *expect_violation ? "violation" : "none";
    t.check(res.violation_found == *expect_violation, out);
  }
  return out;
}

SuiteResult foldability(const SuiteConfig& cfg) {
  Tally t;
  json cases = json::array();
  if (cfg.periodic) {
    cases.push_back(foldability_case(cfg, *cfg.periodic, std::nullopt, t, "periodic"));
  } else if (cfg.cycle) {
    auto d = cycle_orientation(*cfg.cycle);
    cases.push_back(foldability_case(cfg, build_AQ(*cfg.cycle), is_cyclically_oriented(d), t, "cycle"));
  } else {
    for (int n = 3; n <= std::max(3, cfg.n); ++n)
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> d;
        for (int i = 0; i < n; ++i) d.push_back((mask >> i) & 1 ? 1 : -1);
        cases.push_back(foldability_case(cfg, build_AQ(cycle_quiver(d)), is_cyclically_oriented(d), t,
                                         "orientation " + join(d)));
      }
  }
  SuiteResult r;
  r.passed = t.passed();
  r.report = base_report(cfg, t);
  r.report["cases"] = cases;
  std::ostringstream s;
  s << "foldability: " << cases.size() << " inputs, depth " << cfg.depth;
  if (cases.size() == 1 && cases[0]["search"]["violation_found"] == true)
    s << ", witness " << cases[0]["search"]["witness"].dump() << " at depth " << cases[0]["search"]["depth"];
  s << ", " << t.failures.size() << " failures";
  r.summary = s.str();
  return r;
}

SuiteResult cluster_folding(const SuiteConfig& cfg) {
  Tally t;
  PeriodicQuiver g = cfg.periodic ? *cfg.periodic : build_gamma_infinity(cfg.n);
  const bool gamma = !cfg.periodic;
  const OrbitSeed start = initial_orbit_seed(g);
  const Seed folded_start = initial_seed(fold(g));
  t.check(fold_orbit_seed(start) == folded_start, {{"step", "initial"}});
  std::set<RootInterval> roots;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    auto seq = random_orbit_sequence(g, cfg.seed + static_cast<std::uint64_t>(trial), cfg.depth);
    OrbitSeed os = start;
    Seed folded = folded_start;
    for (std::size_t step = 0; step < seq.size(); ++step) {
      try {
        os = orbit_mutate_seed(os, seq[step]);
      } catch (const FoldabilityViolationError& e) {
        t.check(false, {{"trial", trial}, {"sequence", e.sequence()}, {"violations", io::to_json(e.violations())}});
        break;
      }
      folded = mutate_seed(folded, std::to_string(seq[step]));
      const bool same = fold_orbit_seed(os) == folded;
      t.check(same, {{"trial", trial}, {"sequence", std::vector<int>(seq.begin(), seq.begin() + long(step) + 1)}});
      if (!same) break;
      if (gamma) {
        const auto& x = os.cluster[static_cast<std::size_t>(seq[step])];
        auto root = root_of_dvector(orbit_dvector(x, os.pquiver));
        t.check(root && is_orbit_cluster_root(*root, cfg.n),
                {{"trial", trial}, {"variable", to_string(x)}, {"reason", "d-vector outside the allowed roots"}});
        if (root) roots.insert(*root);
      }
    }
  }
  SuiteResult r;
  r.passed = t.passed();
  r.report = base_report(cfg, t);
  json rs = json::array();
  for (const auto& root : roots) rs.push_back(to_string(root));
  r.report["roots_seen"] = rs;
  r.summary = "cluster-folding: " + std::to_string(cfg.trials) + " sequences, " + std::to_string(t.checks) +
              " comparisons, " + std::to_string(roots.size()) + " distinct roots, " +
              std::to_string(t.failures.size()) + " failures";
  return r;
}

SuiteResult flip_mutation(const SuiteConfig& cfg) {
  Tally t;
  std::vector<std::pair<int, int>> ribbons{{1, 1}, {1, 2}, {2, 2}, {3, 3}};
  if (cfg.window) ribbons = {*cfg.window};
  std::size_t visited = 0;
  for (auto [k1, k2] : ribbons)
    for (int trial = 0; trial < cfg.trials; ++trial) {
      Rng rng(cfg.seed + static_cast<std::uint64_t>(trial));
      SigmaTriangulation tr = default_triangulation(k1, k2);
      const int len = uniform(rng, 1, cfg.depth);
      std::vector<int> walk;
      for (int step = 0; step <= len; ++step) {
        ++visited;
        SurfaceReport rep = check_no_virtual_2cycles(tr);
        t.check(rep.quiver_admissible && rep.geometry_clear && rep.agree,
                {{"ribbon", {k1, k2}}, {"walk", walk}, {"triangulation", io::to_json(tr)},
                 {"findings", rep.geometric_findings}, {"violations", io::to_json(rep.quiver_violations)}});
        if (step == len) break;
        const int k = uniform(rng, 0, tr.size() - 1);
        walk.push_back(k);
        SigmaTriangulation next = flip(tr, k);
        t.check(quiver_of(next) == orbit_mutate(quiver_of(tr), k),
                {{"ribbon", {k1, k2}}, {"walk", walk}, {"triangulation", io::to_json(tr)}});
        tr = std::move(next);
      }
    }
  for (int n = 2; n <= 6; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> d;
      for (int i = 0; i < n; ++i) d.push_back((mask >> i) & 1 ? 1 : -1);
      if (is_cyclically_oriented(d)) continue;
      IceQuiver q = cycle_quiver(d);
      t.check(quiver_of(default_triangulation(q)) == build_AQ(q), {{"orientation", d}});
    }
  SuiteResult r;
  r.passed = t.passed();
  r.report = base_report(cfg, t);
  r.report["triangulations_visited"] = visited;
  r.summary = "flip-mutation: " + std::to_string(visited) + " triangulations, " + std::to_string(t.checks) +
              " checks, " + std::to_string(t.failures.size()) + " failures";
  return r;
}

SuiteResult exchange_identities(const SuiteConfig& cfg) {
  Tally t;
  auto [lo, hi] = cfg.window.value_or(std::pair{0, 1});
  std::vector<std::pair<int, int>> pairs;
  for (int i = lo; i <= hi; ++i)
    for (int len = 2; len <= 4; ++len) pairs.emplace_back(i, i + len);
  json ids = json::array();
  for (const auto& rep : verify_exchange_identities(cfg.n, pairs)) {
    json j = io::to_json(rep);
    t.check(rep.verified, j);
    ids.push_back(j);
  }
  SuiteResult r;
  r.passed = t.passed();
  r.report = base_report(cfg, t);
  r.report["identities"] = ids;
  r.summary = "exchange-identities: " + std::to_string(t.checks) + " identities, " +
              std::to_string(t.failures.size()) + " falsified";
  return r;
}

SuiteResult ymonomial_suite(const SuiteConfig& cfg) {
  Tally t;
  const int nmax = std::max(1, std::min(cfg.n, 3));
  for (int n = 1; n <= nmax; ++n)
    for (int i = -8; i <= 8; ++i)
      for (int k = -8; k <= 8; ++k) {
        YMonomial a = a_monomial(i, k);
        t.check(phi_fold(a, n) == a_monomial(((i % (2 * n)) + 2 * n) % (2 * n), k, 2 * n),
                {{"check", "phi(A)"}, {"n", n}, {"i", i}, {"k", k}});
        YMonomial y = YMonomial::y(i, k) * YMonomial::y(i + 1, k - 1, 0, -2);
        t.check(phi_fold(a * y, n) == phi_fold(a, n) * phi_fold(y, n),
                {{"check", "phi homomorphism"}, {"n", n}, {"i", i}, {"k", k}});
      }
  Rng rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    YMonomial m = YMonomial::infinite();
    for (int e = 0; e < 4; ++e) m.add(uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -2, 2));
    std::map<YMonomial::Key, int> c;
    for (int e = 0; e < 3; ++e) c[{uniform(rng, -3, 3), uniform(rng, -3, 3)}] += uniform(rng, 0, 2);
    YMonomial lower = m * a_product(c).inverse();
    t.check(nakajima_leq(m, m).leq, {{"check", "reflexive"}, {"m", to_string(m)}});
    auto down = nakajima_leq(lower, m);
    t.check(down.leq, {{"check", "planted certificate"}, {"m", to_string(m)}});
    bool nontrivial = !a_product(c).is_one();
    t.check(!(nontrivial && nakajima_leq(m, lower).leq), {{"check", "antisymmetric"}, {"m", to_string(m)}});
  }
  auto ex = nakajima_leq(YMonomial::y(0, 2) * YMonomial::y(2, 2), YMonomial::y(1, 1) * YMonomial::y(1, 3));
  t.check(ex.leq && ex.certificate == std::map<YMonomial::Key, int>{{{1, 2}, 1}}, {{"check", "worked certificate"}});
  t.check(!nakajima_leq(YMonomial::y(1, 1), YMonomial::y(2, 1)).leq, {{"check", "incomparable"}});
  for (int n = 1; n <= nmax; ++n) {
    const int p = 2 * n;
    for (int i = 0; i < p; ++i) {
      YMonomial lo = YMonomial::y(i, xi(i), p), up = YMonomial::y(i, xi(i) + 2, p);
      t.check(d_grade(lo * up) == 0, {{"check", "pair grade"}, {"n", n}, {"i", i}});
      for (int j = 0; j < p; ++j)
        for (YMonomial m : {YMonomial::y(j, xi(j), p), YMonomial::y(j, xi(j) + 2, p), lo * up}) {
          YMonomial lowered = m * a_monomial(i, xi(i) + 1, p).inverse();
          if (!in_m_prime(lowered)) continue;
          t.check(d_grade(lowered) == d_grade(m) - 2, {{"check", "A-inverse grade"}, {"n", n}, {"i", i}, {"j", j}});
        }
    }
  }
  SuiteResult r;
  r.passed = t.passed();
  r.report = base_report(cfg, t);
  r.summary = "ymonomial: " + std::to_string(t.checks) + " checks, " + std::to_string(t.failures.size()) + " failures";
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"involution",          "foldability", "cluster-folding", "flip-mutation",
                                              "exchange-identities", "ymonomial"};
  return names;
}

IceQuiver random_ice_quiver(std::uint64_t seed, int max_vertices, int max_mult) {
  Rng rng(seed);
  const int n = uniform(rng, 1, max_vertices);
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i) vs.push_back({std::to_string(i), uniform(rng, 0, 2) == 0});
  vs[0].frozen = false;
  IceQuiver::ArrowMap arrows;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if ((vs[std::size_t(a)].frozen && vs[std::size_t(b)].frozen) || uniform(rng, 0, 2) != 0) continue;
      const Multiplicity m = uniform(rng, 1, max_mult);
      if (uniform(rng, 0, 1)) arrows[{std::size_t(a), std::size_t(b)}] = m;
      else arrows[{std::size_t(b), std::size_t(a)}] = m;
    }
  return IceQuiver(std::move(vs), std::move(arrows));
}

std::vector<int> random_orbit_sequence(const PeriodicQuiver& pq, std::uint64_t seed, int max_length) {
  Rng rng(seed);
  std::vector<int> sites;
  for (const auto& s : pq.sites())
    if (!s.frozen) sites.push_back(s.id);
  std::vector<int> seq;
  if (sites.empty() || max_length < 1) return seq;
  const int len = uniform(rng, 1, max_length);
  while (static_cast<int>(seq.size()) < len) {
    int k = sites[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(sites.size()) - 1))];
    if (sites.size() > 1 && !seq.empty() && seq.back() == k) continue;
    seq.push_back(k);
  }
  return seq;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  if (cfg.n < 1 || cfg.depth < 1 || cfg.trials < 1) throw InputError("n, depth and trials must be positive");
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  if (cfg.suite == "involution") r = involution(cfg);
  else if (cfg.suite == "foldability") r = foldability(cfg);
  else if (cfg.suite == "cluster-folding") r = cluster_folding(cfg);
  else if (cfg.suite == "flip-mutation") r = flip_mutation(cfg);
  else if (cfg.suite == "exchange-identities") r = exchange_identities(cfg);
  else if (cfg.suite == "ymonomial") r = ymonomial_suite(cfg);
  else throw InputError("unknown suite \"" + cfg.suite + "\"");
  if (cfg.timings) {
    std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    r.report["elapsed_ms"] = ms.count();
  }
  return r;
}

}  // namespace torfold
