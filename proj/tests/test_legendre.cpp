#include "doctest.h"

#include <cmath>

#include "coinduel/legendre.hpp"

using namespace coinduel;

TEST_CASE("exact Legendre values") {
  CHECK(legendre_p(0, Rational(3)) == Rational(1));
  CHECK(legendre_p(1, Rational(3)) == Rational(3));
  CHECK(legendre_p(2, Rational(3)) == Rational(13));
  CHECK(legendre_p(3, Rational(1, 2)) == Rational(-7, 16));
  for (unsigned n = 0; n < 10; ++n) CHECK(legendre_p(n, Rational(1)) == Rational(1));
  auto table = legendre_p_table(5, Rational(2));
  REQUIRE(table.size() == 6);
  for (unsigned n = 0; n <= 5; ++n) CHECK(table[n] == legendre_p(n, Rational(2)));
}

TEST_CASE("high-precision Legendre encloses the exact value") {
  Rational u(41, 31);
  Bits bits = 200;
  for (unsigned long n : {5UL, 50UL, 200UL}) {
    Estimate e = legendre_p(n, Real(u, bits), bits);
    Real exact(legendre_p(n, u), bits);
    CHECK(abs(e.value - exact) <= e.error + abs(exact) * Real(1e-55, bits));
  }
}

TEST_CASE("ratio recurrence matches P_n/P_{n-1}") {
  Rational u(5, 3);
  ExactRatioState s = ratio_start(u);
  CHECK(s.r == u);
  for (int i = 0; i < 10; ++i) {
    s = ratio_advance(s);
    CHECK(s.r == legendre_p(s.n, u) / legendre_p(s.n - 1, u));
  }
  LegendreRatioState r = ratio_start(Real(u, 128));
  for (int i = 0; i < 10; ++i) r = ratio_advance(r);
  CHECK(r.r.to_double() == doctest::Approx(s.r.to_double()).epsilon(1e-14));
}

TEST_CASE("ratio enclosures contain the exact ratio") {
  Rational u(101, 99);
  Rational exact = legendre_p(41, u) / legendre_p(40, u);
  RealInterval enc = ratio_enclosure(41, RealInterval(u, 128));
  CHECK(enc.contains(Real(exact, 300)));
  CHECK((enc.hi() - enc.lo()).to_double() < 1e-30);

  DoubleRatioResult d = ratio_enclosure(41, DoubleInterval::from_rational(u));
  REQUIRE(d.ok);
  double x = exact.to_double();
  CHECK(d.r.lo <= x);
  CHECK(x <= d.r.hi);
}

TEST_CASE("phi, psi and their identities") {
  Rational z(9, 164);
  CHECK(phi(0, z) == Rational(1));
  CHECK(phi(1, z) == Rational(1) + z);
  CHECK(psi(0, z) == Rational(0));
  CHECK(psi(1, z) == z);
  // psi_n(1) = n C(2n,n)/(n+1)
  CHECK(psi(2, Rational(1)) == Rational(4));
  CHECK(psi(3, Rational(1)) == Rational(15));
  for (unsigned n = 0; n < 12; ++n) {
    CHECK(psi(n, z) * Rational(2) == phi(n + 1, z) - (Rational(1) + z) * phi(n, z));
    CHECK(phi(n, z) == pow(Rational(1) - z, n) * legendre_p(n, (Rational(1) + z) / (Rational(1) - z)));
  }
  Real zr(z, 128);
  CHECK(phi(7, zr).to_double() == doctest::Approx(phi(7, z).to_double()));
  CHECK(psi(7, zr).to_double() == doctest::Approx(psi(7, z).to_double()));
}

TEST_CASE("integral representation agrees with the recurrence") {
  Rational u(13, 10);
  PrecisionConfig cfg;
  cfg.working_digits = 30;
  for (unsigned long n : {1UL, 10UL, 60UL}) {
    ScaledIntegral s = legendre_integral(BigInt(n), Real(u, 256), cfg);
    // value = mantissa * exp(log_scale)
    double approx = s.mantissa.to_double() * std::exp(s.log_scale.to_double());
    double exact = legendre_p(n, u).to_double();
    CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("cosine-power integral of K^0 is alpha") {
  Bits b = 128;
  CosPowerIntegral r = cos_power_integral(BigInt(0), Real(0.25, b), Real(0.5, b), Real(0.2, b), 30);
  CHECK(r.value.to_double() == doctest::Approx(0.5).epsilon(1e-20));
}
