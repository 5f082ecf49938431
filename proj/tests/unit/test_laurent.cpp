#include "doctest.h"
#include "laurent_oracles.hpp"
#include "torfold/errors.hpp"
#include "torfold/laurent.hpp"

using namespace torfold;

namespace {

const LaurentPoly x = LaurentPoly::var(mut_var(1));
const LaurentPoly y = LaurentPoly::var(mut_var(2));

std::vector<VarKey> sample_keys() { return {mut_var(0), mut_var(1, -1), mut_var(1, 2), frz_var(0), frz_var(3, 1)}; }

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("ring basics") {
    CHECK((x + 1) * (x - 1) == x * x - 1);
    CHECK(x * 1 == x);
    CHECK((x + y) * (x + y) == x * x + 2 * x * y + y * y);
    CHECK((x - x).is_zero());
    CHECK(to_string(x * x - 1) == "x1^2 - 1");
    CHECK(to_string(LaurentPoly::var(frz_var(3, -1), -2)) == "f3@-1^-2");
  }

  TEST_CASE("exact division") {
    CHECK(exact_div(x * x - 1, x - 1) == x + 1);
    CHECK(exact_div(x + 2, x) == LaurentPoly(1L) + 2 * LaurentPoly::var(mut_var(1), -1));
    CHECK_THROWS_AS(exact_div(x + 1, x + 2), InexactDivisionError);
    CHECK_THROWS_AS(exact_div(x, LaurentPoly()), DomainError);
    CHECK_THROWS_AS(exact_div(x + 1, 2 * x), InexactDivisionError);
    try {
      exact_div(x * x + 1, x + 1);
      FAIL("expected inexact division");
    } catch (const InexactDivisionError& e) {
      CHECK_FALSE(e.remainder().empty());
    }
  }

  TEST_CASE("division counters") {
    reset_division_stats();
    (void)exact_div(x * x - 1, x - 1);
    CHECK_THROWS(exact_div(x + 1, x + 2));
    auto s = division_stats();
    CHECK(s.divisions == 2);
    CHECK(s.inexact == 1);
    reset_division_stats();
  }

  TEST_CASE("random ring laws checked by evaluation") {
    gen::Rng rng(31);
    auto keys = sample_keys();
    for (int trial = 0; trial < 200; ++trial) {
      auto a = oracle::random_poly(rng, keys), b = oracle::random_poly(rng, keys), c = oracle::random_poly(rng, keys);
      auto pt = oracle::random_point(rng, keys);
      CHECK(oracle::evaluate(a * b, pt) == oracle::evaluate(a, pt) * oracle::evaluate(b, pt));
      CHECK(oracle::evaluate(a + b, pt) == oracle::evaluate(a, pt) + oracle::evaluate(b, pt));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }

  TEST_CASE("exact_div inverts multiplication") {
    gen::Rng rng(32);
    auto keys = sample_keys();
    for (int trial = 0; trial < 200; ++trial) {
      auto a = oracle::random_poly(rng, keys), b = oracle::random_poly(rng, keys);
      if (b.is_zero()) continue;
      CHECK(exact_div(a * b, b) == a);
    }
  }

  TEST_CASE("inexact division is never silently accepted") {
    gen::Rng rng(33);
    auto keys = sample_keys();
    for (int trial = 0; trial < 100; ++trial) {
      auto a = oracle::random_poly(rng, keys), b = oracle::random_poly(rng, keys);
      if (b.is_zero() || b.is_monomial()) continue;
      auto num = a * b + 1;
      try {
        auto q = exact_div(num, b);
        CHECK(q * b == num);
      } catch (const InexactDivisionError&) {
      }
    }
  }

  TEST_CASE("shift and fold substitutions") {
    CHECK(shift_substitute(LaurentPoly::var(mut_var(0, 0)), 1) == LaurentPoly::var(mut_var(0, 1)));
    CHECK(shift_substitute(x + y, 0) == x + y);
    CHECK(fold_substitute(LaurentPoly::var(mut_var(2, -1)) * LaurentPoly::var(mut_var(2, 0))) ==
          LaurentPoly::var(mut_var(2), 2));
    CHECK(fold_substitute(LaurentPoly(7L)) == LaurentPoly(7L));
    CHECK(psi_mod(LaurentPoly::var(frz_var(7)) * LaurentPoly::var(mut_var(-1)), 6) ==
          LaurentPoly::var(frz_var(1)) * LaurentPoly::var(mut_var(5)));

    gen::Rng rng(34);
    auto keys = sample_keys();
    for (int trial = 0; trial < 100; ++trial) {
      auto a = oracle::random_poly(rng, keys), b = oracle::random_poly(rng, keys);
      const int k = gen::uniform(rng, -3, 3);
      CHECK(shift_substitute(shift_substitute(a, k), -k) == a);
      CHECK(shift_substitute(a * b, k) == shift_substitute(a, k) * shift_substitute(b, k));
      CHECK(shift_substitute(a + b, k) == shift_substitute(a, k) + shift_substitute(b, k));
      CHECK(fold_substitute(a * b) == fold_substitute(a) * fold_substitute(b));
      CHECK(fold_substitute(a + b) == fold_substitute(a) + fold_substitute(b));
      CHECK(fold_substitute(shift_substitute(a, k)) == fold_substitute(a));
    }
  }

  TEST_CASE("denominator vectors") {
    const VarKey k1 = mut_var(1), k2 = mut_var(2), f = frz_var(1);
    auto d0 = denominator_vector(x, {k1, k2});
    CHECK(d0.at(k1) == -1);
    CHECK(d0.at(k2) == 0);
    auto alpha1 = exact_div(y + 1, x);
    auto d1 = denominator_vector(alpha1, {k1, k2, f});
    CHECK(d1.at(k1) == 1);
    CHECK(d1.at(k2) == 0);
    CHECK(d1.count(f) == 0);
  }
}
