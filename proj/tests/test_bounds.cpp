#include "doctest.h"

#include <cmath>

#include "coinduel/bounds.hpp"
#include "coinduel/errors.hpp"
#include "coinduel/exact_oracle.hpp"

using namespace coinduel;

TEST_CASE("bounds at (0.18, 0.2)") {
  GameParams g = GameParams::parse("0.18", "0.2");
  SimpleBounds s = simple_bounds(g);
  CHECK(s.lower == 25);
  CHECK(s.upper == 40);
  CHECK(weak_lower(g) == 24);
  CHECK(linear_lower(g) == 8);
  ImprovedBounds imp = improved_bounds(g);
  CHECK(imp.n_minus == 26);
  CHECK(imp.n_plus == 31);
  CHECK(h_approx(g) == 26);

  BoundSet b = compute_bounds(g);
  CHECK(b.lower() == 26);
  CHECK(b.upper() == 31);
  CHECK_FALSE(b.diagonal);
}

TEST_CASE("diagonal formula") {
  CHECK(diagonal_n(Rational(2, 5)) == 2);
  CHECK(diagonal_tie(Rational(2, 5)));
  CHECK(diagonal_n(Rational(3, 10)) == 1);
  CHECK_FALSE(diagonal_tie(Rational(3, 10)));
  CHECK_THROWS_AS(diagonal_n(Rational(1, 2)), InvalidInput);
  CHECK_THROWS_AS(diagonal_n(Rational(0)), InvalidInput);
  for (long D = 3; D < 40; ++D) {
    for (long a = 1; 2 * a < D; ++a) {
      Rational q(a, D);
      GameParams g(q, Rational(1) - q);
      BigInt N = diagonal_n(q);
      CHECK(brute_force_argmax(g, static_cast<unsigned>(N.get_ui() + 3)).N == N.get_ui());
    }
  }
}

TEST_CASE("the diagonal uses the weak lower bound") {
  GameParams g = GameParams::parse("0.4", "0.6");
  BoundSet b = compute_bounds(g);
  REQUIRE(b.diagonal);
  CHECK(*b.diagonal == 2);
  CHECK(b.lower() <= 2);
  CHECK(b.upper() >= 2);
}

TEST_CASE("points above the diagonal share the bounds of their reflection") {
  GameParams g = GameParams::parse("0.9", "0.95");
  BoundSet a = compute_bounds(g), b = compute_bounds(reflect(g));
  CHECK(a.lower() == b.lower());
  CHECK(a.upper() == b.upper());
}

TEST_CASE("exact ceilings of quadratic roots") {
  // k^2 - 2 = 0 -> sqrt 2
  CHECK(ceil_larger_root(Rational(1), Rational(0), Rational(-2)) == 2);
  // (k - 3)(k + 1): root exactly 3
  CHECK(ceil_larger_root(Rational(1), Rational(-2), Rational(-3)) == 3);
  CHECK(ceil_larger_root(Rational(1, 3), Rational(-1), Rational(0)) == 3);
  CHECK_THROWS_AS(ceil_larger_root(Rational(1), Rational(0), Rational(1)), NoRealRoot);
  // a root just above an integer
  Rational eps(1, 1000000007);
  CHECK(ceil_larger_root(Rational(1), Rational(0) - (Rational(5) + eps), Rational(0)) == 6);
}

TEST_CASE("q_infinity") {
  CHECK(q_infinity(1).to_double() == doctest::Approx(0.1464466094067262));
  CHECK(q_infinity(3).to_double() == doctest::Approx((1 - std::sqrt(0.75)) / 2));
}

TEST_CASE("bounds bracket the brute-force optimum") {
  for (long D : {7L, 13L, 29L, 50L}) {
    for (long a = 1; a < D; ++a) {
      for (long b = a + 1; b < D; ++b) {
        GameParams g(Rational(a, D), Rational(b, D));
        BoundSet bs = compute_bounds(g);
        if (bs.upper() > 60) continue;
        BigInt N = brute_force_argmax(g, static_cast<unsigned>(bs.upper().get_ui() + 2)).N;
        CAPTURE(g.describe());
        CHECK(bs.lower() <= N);
        CHECK(N <= bs.upper());
        if (bs.lower_linear) CHECK(*bs.lower_linear <= N);
        if (bs.lower_improved) CHECK(*bs.lower_improved <= N);
        if (bs.upper_improved) CHECK(N <= *bs.upper_improved);
      }
    }
  }
}
