#include "doctest.h"

#include "coinduel/errors.hpp"
#include "coinduel/exact_oracle.hpp"
#include "coinduel/legendre.hpp"
#include "coinduel/winprob.hpp"

using namespace coinduel;

TEST_CASE("series matches the brute force within its error bounds") {
  for (const auto& g : {GameParams::parse("0.18", "0.2"), GameParams::parse("0.9", "0.95"),
                        GameParams::parse("1/7", "1/3")}) {
    WinProbSeries s = f_series(g, 40, PrecisionConfig{});
    auto exact = brute_force_f_series(g, 40);
    REQUIRE(s.values.size() == 41);
    for (unsigned n = 0; n <= 40; ++n) {
      Bits b = s.values[n].f.precision();
      Real diff = abs(s.values[n].f - Real(exact[n], b));
      CHECK(diff <= s.values[n].abs_error);
      CHECK(s.values[n].abs_error.to_double() < 1e-40);
    }
  }
}

TEST_CASE("first terms and the argmax") {
  GameParams g = GameParams::parse("0.18", "0.2");
  WinProbSeries s = f_series(g, 60, PrecisionConfig{});
  CHECK(s.values[0].f.to_double() == doctest::Approx(0.0));
  CHECK(s.values[1].f.to_double() == doctest::Approx(0.144));
  CHECK(s.argmax() == 26);
  CHECK(s.values[26].f.to_double() == doctest::Approx(0.3583820389747177));
}

TEST_CASE("Y recurrence against its definition") {
  GameParams g = GameParams::parse("0.21", "0.34");
  Transform t(g);
  const Rational m = g.margin();
  auto P = legendre_p_table(60, t.u());
  Bits bits = 256;
  YCoefficients c = y_coefficients(g, bits);
  YState s = y_seed(g, bits);
  Rational y = Rational(1) / m, mk(1);
  for (unsigned n = 1; n <= 60; ++n) {
    y += mk * P[n - 1];
    mk *= m;
    if (n > 1) s = y_advance(s, c);
    CHECK(s.n == static_cast<long>(n));
    Real err = abs(s.y - Real(y, bits));
    CHECK(err.to_double() < 1e-50);
  }
  YState a = y_advance(y_seed(g, bits), g);
  YState b = y_advance(y_seed(g, bits), c);
  CHECK(a.y == b.y);
}

TEST_CASE("diagonal and bad lengths") {
  GameParams d = GameParams::parse("0.3", "0.7");
  CHECK_THROWS_AS(y_seed(d, 128), DiagonalDomain);
  CHECK_THROWS_AS(f_series(GameParams::parse("0.1", "0.2"), kMaxSeriesLength + 1, PrecisionConfig{}),
                  InvalidInput);
}

TEST_CASE("the series is unimodal for a near-diagonal point") {
  GameParams g = GameParams::parse("0.01", "0.011");
  WinProbSeries s = f_series(g, 1000, PrecisionConfig{});
  unsigned long N = s.argmax();
  for (unsigned long n = 1; n <= N; ++n) CHECK(s.values[n].f > s.values[n - 1].f);
  for (unsigned long n = N + 1; n <= 1000; ++n) CHECK(s.values[n].f < s.values[n - 1].f);
}
