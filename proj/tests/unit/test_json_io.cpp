#include "doctest.h"
#include "generators.hpp"
#include "laurent_oracles.hpp"
#include "periodic_oracles.hpp"
#include "torfold/json_io.hpp"

using namespace torfold;
namespace io = torfold::io;

TEST_SUITE("json-io") {
  TEST_CASE("ice quiver round trip") {
    gen::Rng rng(3);
    for (int t = 0; t < 200; ++t) {
      IceQuiver q = gen::ice_quiver(rng);
      CHECK(io::ice_quiver_from_json(io::parse(io::dump(io::to_json(q)))) == q);
    }
  }

  TEST_CASE("ice quiver reader names the offending pair") {
    auto j = io::parse(R"({"vertices":[{"id":"1","frozen":false},{"id":"2","frozen":false}],
                           "arrows":[{"from":"1","to":"2","mult":1},{"from":"2","to":"1","mult":1}]})");
    try {
      io::ice_quiver_from_json(j);
      FAIL("accepted a 2-cycle");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("(1, 2)") != std::string::npos);
    }
    CHECK_THROWS_AS(io::ice_quiver_from_json(io::parse(R"({"vertices":[{"id":"1"}],"arrows":[{"from":"1","to":"1"}]})")),
                    InputError);
    CHECK_THROWS_AS(io::ice_quiver_from_json(io::parse(R"({"vertices":3})")), InputError);
    CHECK_THROWS_AS(io::parse("{not json"), InputError);
  }

  TEST_CASE("periodic quiver round trip") {
    gen::Rng rng(4);
    for (int t = 0; t < 200; ++t) {
      PeriodicQuiver pq = oracle::periodic_quiver(rng);
      CHECK(io::periodic_quiver_from_json(io::to_json(pq)) == pq);
    }
    PeriodicQuiver g = build_gamma_infinity(3);
    CHECK(io::periodic_quiver_from_json(io::to_json(g)) == g);
    CHECK(io::to_json(g)["period"] == 6);
  }

  TEST_CASE("Laurent round trip keeps big coefficients") {
    gen::Rng rng(5);
    std::vector<VarKey> keys{mut_var(0), mut_var(1, -1), frz_var(2), mut_var(3, 2)};
    for (int t = 0; t < 200; ++t) {
      LaurentPoly p = oracle::random_poly(rng, keys);
      CHECK(io::laurent_from_json(io::to_json(p)) == p);
    }
    LaurentPoly big = LaurentPoly(mpz_class("123456789012345678901234567890")) * LaurentPoly::var(mut_var(1), -2);
    auto j = io::to_json(big);
    CHECK(j["terms"][0]["coeff"] == "123456789012345678901234567890");
    CHECK(j["terms"][0]["exps"][0]["layer"] == "mut");
    CHECK(j["terms"][0]["exps"][0]["e"] == -2);
    CHECK(io::laurent_from_json(j) == big);
    CHECK_THROWS_AS(io::laurent_from_json(io::parse(R"({"terms":[{"coeff":"x1","exps":[]}]})")), InputError);
  }

  TEST_CASE("seed and orbit seed round trip") {
    Seed s = mutate_seed(gamma_window(-2, 3), "1");
    CHECK(io::seed_from_json(io::to_json(s)) == s);
    OrbitSeed os = orbit_mutate_seed(initial_orbit_seed(build_gamma_infinity(2)), 0);
    os = orbit_mutate_seed(os, 1);
    CHECK(io::orbit_seed_from_json(io::to_json(os)) == os);
    CHECK(io::to_json(os)["history"] == io::json::array({0, 1}));
  }

  TEST_CASE("triangulation and Y-monomial round trip") {
    SigmaTriangulation t = flip(default_triangulation(2, 3), 1);
    CHECK(io::triangulation_from_json(io::to_json(t)) == t);
    YMonomial m = YMonomial::y(1, 3) * YMonomial::y(-2, 0, 0, -2);
    CHECK(io::ymonomial_from_json(io::to_json(m)) == m);
    YMonomial tm = YMonomial::y(5, 1, 4);
    CHECK(io::ymonomial_from_json(io::to_json(tm)) == tm);
  }

  TEST_CASE("foldability result carries the witness") {
    FoldabilityResult r = foldability_search(build_AQ(cycle_quiver({1, 1, 1})), 3);
    auto j = io::to_json(r);
    CHECK(j["violation_found"] == true);
    CHECK(j["depth"] == 1);
    CHECK(j["violations"][0]["condition"] == "virtual-2-cycle");
  }
}
