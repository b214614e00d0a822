#include "doctest.h"

#include "coinduel/errors.hpp"
#include "coinduel/model.hpp"

using namespace coinduel;

TEST_CASE("parameters must satisfy 0 < q < p < 1") {
  CHECK_NOTHROW(GameParams::parse("0.18", "0.2"));
  CHECK_THROWS_AS(GameParams::parse("0.2", "0.18"), InvalidInput);
  CHECK_THROWS_AS(GameParams::parse("0.2", "0.2"), InvalidInput);
  CHECK_THROWS_AS(GameParams::parse("0", "0.2"), InvalidInput);
}

TEST_CASE("transform of (0.18, 0.2)") {
  Transform t(GameParams::parse("0.18", "0.2"));
  CHECK(t.x() == Rational(1, 4));
  CHECK(t.y() == Rational(9, 41));
  CHECK(t.z() == Rational(9, 164));
  // u = 1 + 2pq/(1-p-q), rho = (1-p+q)/(1-p-q)
  CHECK(t.u() == Rational(1) + Rational(2) * Rational(9, 50) * Rational(1, 5) / Rational(31, 50));
  CHECK(t.rho() == Rational(49, 50) / Rational(31, 50));
  CHECK(t.u() == (Rational(1) + t.z()) / (Rational(1) - t.z()));
}

TEST_CASE("u and rho are undefined on the diagonal") {
  GameParams g = GameParams::parse("0.4", "0.6");
  CHECK(g.on_diagonal());
  Transform t(g);
  CHECK(t.z() == Rational(1));
  CHECK_THROWS_AS(t.u(), DiagonalDomain);
  CHECK_THROWS_AS(t.rho(), DiagonalDomain);
}

TEST_CASE("cancellation-free sqrt(u^2 - 1)") {
  GameParams g = GameParams::parse("1e-30", "2e-30");
  Transform t(g);
  Real direct = sqrt(t.u_real(400) * t.u_real(400) - Real(1L, 400));
  Real stable = t.root_u2m1_real(400);
  Real rel = abs(direct - stable) / stable;
  CHECK(rel.to_double() < 1e-50);
}

TEST_CASE("reflection and canonical form") {
  GameParams g = GameParams::parse("0.9", "0.95");
  GameParams r = reflect(g);
  CHECK(r.q() == Rational(1, 20));
  CHECK(r.p() == Rational(1, 10));
  CHECK(reflect(r) == g);
  CHECK(canonical(g) == r);
  CHECK(canonical(r) == r);
  CHECK(g.gap() == r.gap());

  Region in = region(r), out = region(g), diag = region(GameParams::parse("0.3", "0.7"));
  CHECK(in.in_triangle_T);
  CHECK_FALSE(out.in_triangle_T);
  CHECK(diag.on_diagonal);
}
