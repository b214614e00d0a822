#include "doctest.h"

#include "coinduel/exact_oracle.hpp"
#include "coinduel/legendre.hpp"

using namespace coinduel;

namespace {
GameParams point(const char* q, const char* p) { return GameParams::parse(q, p); }
}  // namespace

TEST_CASE("binomial rows") {
  const auto& row = binomial_row(6);
  REQUIRE(row.size() == 7);
  CHECK(row[0] == 1);
  CHECK(row[3] == 20);
  CHECK(row[6] == 1);
}

TEST_CASE("small win probabilities by hand") {
  GameParams g = point("0.18", "0.2");
  CHECK(brute_force_f(g, 0) == Rational(0));
  // one toss: the underdog needs heads against tails
  CHECK(brute_force_f(g, 1) == Rational(18, 125));
  CHECK(brute_force_f(g, 1) == g.q() * (Rational(1) - g.p()));
  // two tosses: 2-0 or 2-1 or 1-0
  const Rational q = g.q(), p = g.p(), Q = Rational(1) - q, P = Rational(1) - p;
  Rational two = q * q * (Rational(1) - p * p) + Rational(2) * q * Q * P * P;
  CHECK(brute_force_f(g, 2) == two);
}

TEST_CASE("the underdog's curve peaks at 26 for (0.18, 0.2)") {
  GameParams g = point("0.18", "0.2");
  BruteForceMax m = brute_force_argmax(g, 60);
  CHECK(m.N == 26);
  double f = m.f_at_N.to_double();
  CHECK(f > 0.355);
  CHECK(f < 0.365);
}

TEST_CASE("argmax keeps the smaller of two tied values") {
  // on p + q = 1 with q = n/(2n+1), f(n) = f(n+1)
  GameParams g(Rational(2, 5), Rational(3, 5));
  auto f = brute_force_f_series(g, 6);
  CHECK(f[2] == f[3]);
  CHECK(brute_force_argmax(g, 6).N == 2);
}

TEST_CASE("indicator examples") {
  GameParams g = point("0.18", "0.2");
  Transform t(g);
  // n = 1: y(1 + z) - z
  CHECK(exact_indicator(g, 1) == t.y() * (Rational(1) + t.z()) - t.z());
  CHECK(exact_indicator(g, 1).to_double() == doctest::Approx(0.17668).epsilon(1e-4));
  CHECK(exact_indicator(g, 0) == t.y());
  CHECK(exact_indicator(point("0.4", "0.6"), 2) == Rational(0));
}

TEST_CASE("difference identity holds exactly") {
  for (const auto& g : {point("0.18", "0.2"), point("1/7", "5/6"), point("0.01", "0.9"),
                        point("0.3", "0.7")}) {
    for (unsigned n = 0; n <= 12; ++n) CHECK(verify_recurrence_identity(g, n));
  }
}

TEST_CASE("generating function reproduces f") {
  for (const auto& g : {point("0.18", "0.2"), point("2/9", "3/5"), point("0.05", "0.5")}) {
    auto gf = gf_coefficients(g, 12);
    auto f = brute_force_f_series(g, 12);
    for (unsigned n = 0; n <= 12; ++n) CHECK(gf[n] == f[n]);
  }
}

TEST_CASE("f is symmetric under (q,p) -> (1-p,1-q)") {
  GameParams g = point("0.1", "0.25");
  GameParams r = reflect(g);
  for (unsigned n = 1; n <= 10; ++n) CHECK(brute_force_f(g, n) == brute_force_f(r, n));
}
