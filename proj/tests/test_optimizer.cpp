#include "doctest.h"

#include "coinduel/exact_oracle.hpp"
#include "coinduel/optimizer.hpp"

using namespace coinduel;

TEST_CASE("the opening example") {
  OptimalResult r = optimal_n(GameParams::parse("0.18", "0.2"));
  CHECK(r.N == 26);
  CHECK_FALSE(r.tie);
  CHECK_FALSE(r.reflected);
  CHECK(r.method_trace.size() <= 6);
}

TEST_CASE("reflection gives the same N") {
  OptimalResult a = optimal_n(GameParams::parse("0.9", "0.95"));
  OptimalResult b = optimal_n(GameParams::parse("0.05", "0.1"));
  CHECK(a.N == b.N);
  CHECK(a.reflected);
  CHECK_FALSE(b.reflected);
}

TEST_CASE("diagonal ties report the smaller length") {
  OptimalResult r = optimal_n(GameParams::parse("0.4", "0.6"));
  CHECK(r.N == 2);
  CHECK(r.tie);
  OptimalResult s = optimal_n(GameParams::parse("0.3", "0.7"));
  CHECK(s.N == 1);
  CHECK_FALSE(s.tie);
}

TEST_CASE("agreement with brute force on a grid") {
  for (long D : {11L, 17L, 40L}) {
    for (long a = 1; a < D; ++a) {
      for (long b = a + 1; b < D; ++b) {
        GameParams g(Rational(a, D), Rational(b, D));
        BoundSet bs = compute_bounds(g);
        if (bs.upper() > 60) continue;
        unsigned bf = brute_force_argmax(g, static_cast<unsigned>(bs.upper().get_ui() + 2)).N;
        CAPTURE(g.describe());
        CHECK(optimal_n(g).N == bf);
      }
    }
  }
}

TEST_CASE("giant N from the table") {
  CHECK(to_string(optimal_n(GameParams::parse("1e-5", "2e-5")).N) == "72768");
  CHECK(to_string(optimal_n(GameParams::parse("1e-10", "2e-10")).N) == "7276890317");
  CHECK(to_string(optimal_n(GameParams::parse("1e-20", "2e-20")).N) == "72768903179467598852");
}

TEST_CASE("explicit precision") {
  PrecisionConfig cfg;
  cfg.working_digits = 60;
  CHECK(to_string(optimal_n(GameParams::parse("1e-15", "2e-15"), cfg).N) == "727689031794675");
  CHECK(suggested_digits(BigInt(999)) == 36);
}
