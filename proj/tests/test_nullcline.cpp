#include "doctest.h"

#include <cmath>

#include "coinduel/errors.hpp"
#include "coinduel/nullcline.hpp"

using namespace coinduel;

TEST_CASE("bounding lines") {
  CHECK(line_L(1, 0.1) == doctest::Approx(1.0 / 3 + 0.1));
  CHECK(line_K(2, 0.0) == doctest::Approx(1.0 / 3));
  CHECK(line_M(2, 0.3) == doctest::Approx(1.0 / 3 + 0.2));
}

TEST_CASE("derivative formula and its removable points") {
  CHECK(derivative_formula(3, 0.0, 0.25) == doctest::Approx(3.0 / 8));
  CHECK(derivative_formula(3, 3.0 / 7, 4.0 / 7) == doctest::Approx(1.0));
  CHECK(derivative_formula(3, Rational(0), Rational(1, 4)) == Rational(3, 8));
  CHECK(derivative_formula(3, Rational(3, 7), Rational(4, 7)) == Rational(1));
  // n(q - p) + q = 0 away from the removable points
  CHECK_THROWS_AS(derivative_formula(1, Rational(1, 5), Rational(2, 5)), SingularDenominator);
  // slope of p_1 from its closed form, by central difference
  double q = 0.2, h = 1e-6;
  double slope = (p1_closed(q + h) - p1_closed(q - h)) / (2 * h);
  CHECK(derivative_formula(1, q, p1_closed(q)) == doctest::Approx(slope).epsilon(1e-7));
}

TEST_CASE("closed forms at the ends") {
  CHECK(p1_closed(0.0) == doctest::Approx(0.5));
  CHECK(p1_closed(1.0 / 3) == doctest::Approx(2.0 / 3));
  CHECK(p2_closed(0.0) == doctest::Approx(1.0 / 3));
  CHECK(p2_closed(0.4) == doctest::Approx(0.6));
  // the rationalized form equals the printed one away from 0/0
  double q = 0.2, s = std::sqrt(1 - 4 * q + 6 * q * q);
  CHECK(p2_closed(q) == doctest::Approx((1 - q) * (2 - 4 * q - s) / (3 - 12 * q + 10 * q * q)));
}

TEST_CASE("traces follow p_1 and p_2") {
  for (long n : {1L, 2L}) {
    TraceOptions opt;
    opt.samples = 100;
    NullclineTrace t = trace(n, opt);
    CHECK(t.violations.empty());
    REQUIRE(t.samples.size() == 100);
    double sup = 0;
    for (const auto& s : t.samples) sup = std::max(sup, std::abs(s.p - (n == 1 ? p1_closed(s.q) : p2_closed(s.q))));
    CHECK(sup < 1e-8);
    CHECK(t.endpoint_q == doctest::Approx(n / (2.0 * n + 1)));
    CHECK(t.p_at(0.1) == doctest::Approx(n == 1 ? p1_closed(0.1) : p2_closed(0.1)).epsilon(1e-9));
    CHECK_THROWS_AS(t.p_at(0.9), InvalidInput);
  }
}

TEST_CASE("traces are nested and respect their lines") {
  std::vector<NullclineTrace> ts;
  for (long n = 1; n <= 6; ++n) ts.push_back(trace(n));
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    CHECK(ts[k].violations.empty());
    for (const auto& s : ts[k + 1].samples) {
      if (s.q > ts[k].q_end) break;
      CHECK(ts[k].p_at(s.q) > s.p);
    }
  }
  for (const auto& s : ts[3].samples) {
    CHECK(s.p > line_L(4, s.q));
    CHECK(s.p < line_M(4, s.q));
  }
}

TEST_CASE("second derivative polynomial and inflection cubic agree") {
  Rational q(1, 7), p(2, 5);
  for (long n : {1L, 3L, 9L}) {
    CHECK(second_derivative_poly(n, q, p) == inflection_cubic(n, q, p));
    CHECK(second_derivative_poly(n, 0.15, 0.4) == doctest::Approx(inflection_cubic(n, 0.15, 0.4)));
  }
}

TEST_CASE("inflection curve lies below the nullcline") {
  for (double q : {0.05, 0.1, 0.2}) {
    double pm = inflection_root(3, q);
    CHECK(pm > q);
    CHECK(pm < 1 - q);
    CHECK(std::abs(inflection_cubic(3, q, pm)) < 1e-9);
  }
  auto curve = inflection_curve(2, {0.05, 0.1});
  CHECK(curve.size() == 2);
}

TEST_CASE("intersections approach q_infinity from the right of the closed form") {
  Intersection first = q_intersection(1, 1);
  CHECK(first.q == doctest::Approx(0.0));
  double prev = 0;
  for (long n : {2L, 4L, 8L}) {
    Intersection x = q_intersection(n, 1);
    CHECK(x.q > prev);
    CHECK(x.q >= x.q_minus - 1e-9);
    CHECK(x.q < 0.1464466094067262);
    prev = x.q;
  }
  CHECK_THROWS_AS(q_intersection(2, 1, IntersectionIndexing::Definition), NoIntersection);
  CHECK(q_minus_closed(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("delta of a point") {
  // N(0.18, 0.2) = 26, simple lower 25
  CHECK(delta(GameParams::parse("0.18", "0.2")) == 1);
}
