#include <set>

#include "doctest.h"
#include "periodic_oracles.hpp"
#include "torfold/cluster.hpp"
#include "torfold/errors.hpp"

using namespace torfold;

namespace {

IceQuiver a2() { return IceQuiver({{"1", false}, {"2", false}}, std::vector<Arrow>{{"1", "2"}}); }

LaurentPoly X(int site, int shift = 0) { return LaurentPoly::var(mut_var(site, shift)); }
LaurentPoly F(int site, int shift = 0) { return LaurentPoly::var(frz_var(site, shift)); }

/// Initial seed of the unfolded quiver, variable of copy k of site s keyed (s, k).
Seed unfolded_seed(const PeriodicQuiver& pq, int R) {
  IceQuiver q = oracle::unfold(pq, R);
  std::vector<VarKey> keys;
  for (int k = -R; k <= R; ++k)
    for (const auto& s : pq.sites()) keys.push_back({s.id, k, s.frozen ? Layer::Frozen : Layer::Mutable});
  return initial_seed(q, keys);
}

/// Every cluster variable reachable inside the given mutable vertices (BFS over seeds).
std::vector<LaurentPoly> all_variables(const Seed& start, const std::vector<std::size_t>& allowed) {
  std::vector<LaurentPoly> found;
  auto known = [&](const LaurentPoly& p) { return std::find(found.begin(), found.end(), p) != found.end(); };
  std::set<std::string> seen;
  auto sig = [&](const Seed& s) {
    std::vector<std::string> parts;
    for (auto v : allowed) parts.push_back(to_string(s.cluster[v]));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (auto& p : parts) out += p + "|";
    return out;
  };
  std::vector<Seed> todo{start};
  seen.insert(sig(start));
  for (auto v : allowed) found.push_back(start.cluster[v]);
  while (!todo.empty()) {
    Seed s = todo.back();
    todo.pop_back();
    for (auto v : allowed) {
      Seed t = mutate_seed_at(s, v);
      if (!known(t.cluster[v])) found.push_back(t.cluster[v]);
      if (seen.insert(sig(t)).second) todo.push_back(t);
    }
  }
  return found;
}

}  // namespace

TEST_SUITE("cluster-engine") {
  TEST_CASE("initial seeds") {
    Seed g = initial_seed(oracle::gamma_tilde(3));
    CHECK(g.cluster.size() == 12);
    CHECK(g.cluster[0] == X(0));
    CHECK(g.cluster[6] == F(6));
    OrbitSeed os = initial_orbit_seed(build_gamma_infinity(3));
    CHECK(os.cluster.size() == 12);
    CHECK(os.cluster[7] == F(7));
    CHECK(initial_seed(IceQuiver()).cluster.empty());
    PeriodicQuiver loop(1, {{0, false}}, std::vector<PeriodicArrow>{{0, 0, 1, 1}});
    CHECK_THROWS_AS(initial_orbit_seed(loop), FoldingError);
  }

  TEST_CASE("rank two exchange") {
    Seed s = initial_seed(a2());
    Seed m = mutate_seed(s, "1");
    CHECK(m.cluster[0] == exact_div(X(1) + 1, X(0)));
    CHECK(m.history == std::vector<std::string>{"1"});

    Seed t = s;
    for (const char* v : {"1", "2", "1", "2", "1"}) t = mutate_seed(t, v);
    CHECK(t.cluster[0] == X(1));
    CHECK(t.cluster[1] == X(0));

    Seed lone = initial_seed(IceQuiver({{"a", false}}, std::vector<Arrow>{}));
    CHECK(mutate_seed(lone, "a").cluster[0] == exact_div(LaurentPoly(2L), X(0)));

    IceQuiver iced({{"1", false}, {"2", true}}, std::vector<Arrow>{{"1", "2"}});
    CHECK_THROWS_AS(mutate_seed(initial_seed(iced), "2"), MutationAtFrozenError);
  }

  TEST_CASE("orbit seed mutation matches brute-force mutation of the unfolded quiver") {
    gen::Rng rng(41);
    for (int n = 1; n <= 2; ++n)
      for (int trial = 0; trial < 10; ++trial) {
        const PeriodicQuiver g = build_gamma_infinity(n);
        const int depth = 3, R = depth + 2;
        OrbitSeed os = initial_orbit_seed(g);
        Seed unfolded = unfolded_seed(g, R);
        for (int step = 0; step < depth; ++step) {
          const int K = gen::uniform(rng, 0, 2 * n - 1);
          os = orbit_mutate_seed(os, K);
          for (int k = -R; k <= R; ++k) unfolded = mutate_seed(unfolded, oracle::copy_id(K, k));
        }
        for (const auto& site : g.sites())
          CHECK(os.cluster[std::size_t(site.id)] ==
                unfolded.cluster[unfolded.quiver.index_of(oracle::copy_id(site.id, 0))]);
      }
  }

  TEST_CASE("folding the orbit seed equals mutating the folded seed") {
    gen::Rng rng(42);
    for (int n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        OrbitSeed os = initial_orbit_seed(build_gamma_infinity(n));
        Seed folded = initial_seed(oracle::gamma_tilde(n));
        CHECK(fold_orbit_seed(os) == folded);
        for (int step = 0; step < 4; ++step) {
          const int K = gen::uniform(rng, 0, 2 * n - 1);
          os = orbit_mutate_seed(os, K);
          folded = mutate_seed(folded, std::to_string(K));
          CHECK(fold_orbit_seed(os) == folded);
        }
        OrbitSeed back = orbit_mutate_seed(orbit_mutate_seed(os, 0), 0);
        CHECK(back.cluster == os.cluster);
      }
  }

  TEST_CASE("Γ_∞(2): one exchange at an even site") {
    OrbitSeed os = orbit_mutate_seed(initial_orbit_seed(build_gamma_infinity(2)), 0);
    // 0 -> 1 and 0 -> -1 = (3, copy -1); frozen 0' -> 0
    CHECK(os.cluster[0] == exact_div(X(1) * X(3, -1) + F(4), X(0)));
  }

  TEST_CASE("the oriented 3-cycle stops at the first orbit-mutation") {
    OrbitSeed os = initial_orbit_seed(build_AQ(cycle_quiver({1, 1, 1})));
    try {
      orbit_mutate_seed(os, 0);
      FAIL("expected a foldability violation");
    } catch (const FoldabilityViolationError& e) {
      CHECK(e.sequence() == std::vector<int>{0});
      CHECK(e.violations().front() == Violation{1, 2, "virtual-2-cycle"});
    }
  }

  TEST_CASE("find_cluster_variable against exhaustive enumeration") {
    const Seed w = gamma_window(-2, 7);
    std::vector<std::size_t> allowed;
    for (int l = 1; l <= 4; ++l) allowed.push_back(w.quiver.index_of(std::to_string(l)));
    auto every = all_variables(w, allowed);
    CHECK(every.size() == 4 + 10);  // type A4: 4 initial + 10 positive roots
    for (int i = 1; i <= 4; ++i)
      for (int j = i; j <= 4; ++j) {
        LaurentPoly v = find_cluster_variable(w, RootInterval::positive(i, j));
        CHECK(std::find(every.begin(), every.end(), v) != every.end());
        CHECK(root_of_dvector(label_dvector(v, w)) == RootInterval::positive(i, j));
        CHECK(v.has_positive_coefficients());
      }
    CHECK(find_cluster_variable(w, RootInterval::negative_simple(3)) == X(3));
    CHECK_THROWS_AS(find_cluster_variable(w, RootInterval::positive(-1, 2)), InputError);
  }

  TEST_CASE("type A3 window has six non-initial variables") {
    const Seed w = gamma_window(0, 4);
    std::vector<std::size_t> allowed;
    for (int l = 1; l <= 3; ++l) allowed.push_back(w.quiver.index_of(std::to_string(l)));
    auto every = all_variables(w, allowed);
    CHECK(every.size() - 3 == 6);
    std::set<RootInterval> roots;
    for (const auto& v : every) roots.insert(*root_of_dvector(label_dvector(v, w)));
    CHECK(roots.size() == 9);
    CHECK(roots.count(RootInterval::positive(1, 2)) == 1);
  }

  TEST_CASE("orbit-cluster roots") {
    CHECK_FALSE(is_orbit_cluster_root(RootInterval::positive(1, 6), 3));
    CHECK(is_orbit_cluster_root(RootInterval::positive(3, 4), 3));
    CHECK(is_orbit_cluster_root(RootInterval::negative_simple(5), 1));
    CHECK(is_orbit_cluster_root(RootInterval::positive(1, 7), 3));
  }

  TEST_CASE("root_of_dvector") {
    CHECK(root_of_dvector({{1, 1}, {2, 1}, {3, 0}}) == RootInterval::positive(1, 2));
    CHECK(root_of_dvector({{4, -1}}) == RootInterval::negative_simple(4));
    CHECK_FALSE(root_of_dvector({{1, 1}, {3, 1}}).has_value());
    CHECK_FALSE(root_of_dvector({{1, 2}}).has_value());
    CHECK_FALSE(root_of_dvector({}).has_value());
  }

  TEST_CASE("frozen coefficient solver") {
    const LaurentPoly a = X(1) + X(2), b = X(3);
    auto f = solve_frozen_coefficients(a * F(0) + b * F(1) * F(1), {a, b});
    REQUIRE(f.has_value());
    CHECK((*f)[0] == Monomial::var(frz_var(0)));
    CHECK((*f)[1] == Monomial::var(frz_var(1), 2));
    CHECK_FALSE(solve_frozen_coefficients(a * X(1) + b, {a, b}).has_value());
    CHECK_FALSE(solve_frozen_coefficients(a, {a, b}).has_value());
  }

  TEST_CASE("exchange relation with discovered frozen monomials") {
    auto r = verify_exchange_relation(1, 1, 3);
    CHECK(r.verified);
    CHECK(r.frozen_monomials.size() == 2);
    auto r3 = verify_exchange_relation(3, 1, 3);
    CHECK(r3.verified);
  }
}
