#include "doctest.h"

#include "coinduel/errors.hpp"
#include "coinduel/exact_oracle.hpp"
#include "coinduel/indicator.hpp"

using namespace coinduel;

namespace {
Sign exact_sign(const GameParams& g, unsigned n) { return sign_of(exact_indicator(g, n).sign()); }
}  // namespace

TEST_CASE("diagonal and n = 0 are decided exactly") {
  PrecisionConfig cfg;
  GameParams d = GameParams::parse("0.4", "0.6");
  CHECK(indicator_sign({d, BigInt(2)}, cfg).sign == Sign::Zero);
  CHECK(indicator_sign({d, BigInt(1)}, cfg).sign == Sign::Positive);
  CHECK(indicator_sign({d, BigInt(3)}, cfg).sign == Sign::Negative);
  CHECK(indicator_sign({d, BigInt("100000000000000000000")}, cfg).sign == Sign::Negative);
  CertifiedSign zero = indicator_sign({GameParams::parse("0.18", "0.2"), BigInt(0)}, cfg);
  CHECK(zero.sign == Sign::Positive);
  CHECK(zero.method == SignMethod::ExactRational);
}

TEST_CASE("each strategy reproduces the exact sign") {
  PrecisionConfig cfg;
  for (const auto& g : {GameParams::parse("0.18", "0.2"), GameParams::parse("0.05", "0.1"),
                        GameParams::parse("0.8", "0.9"), GameParams::parse("0.31", "0.33")}) {
    for (unsigned n : {1u, 2u, 7u, 13u, 25u, 26u, 27u, 100u, 300u}) {
      Sign e = exact_sign(canonical(g), n);
      CAPTURE(n);
      CHECK(indicator_sign_with({g, BigInt(n)}, Strategy::Exact, cfg).sign == e);
      CHECK(indicator_sign_with({g, BigInt(n)}, Strategy::Recurrence, cfg).sign == e);
      CHECK(indicator_sign_with({g, BigInt(n)}, Strategy::Quadrature, cfg).sign == e);
      CHECK(indicator_sign({g, BigInt(n)}, cfg).sign == e);
    }
  }
}

TEST_CASE("dispatch picks the method by size") {
  GameParams g = GameParams::parse("1e-10", "2e-10");
  IndicatorConfig cfg;
  cfg.precision.working_digits = 50;
  CHECK(indicator_sign({g, BigInt(100)}, cfg).method == SignMethod::ExactRational);
  CHECK(indicator_sign({g, BigInt(100000)}, cfg).method == SignMethod::HighPrecisionRecurrence);
  CertifiedSign big = indicator_sign({g, BigInt("7276890317")}, cfg);
  CHECK(big.method == SignMethod::Quadrature);
  CHECK(big.sign == Sign::Negative);
  CHECK(indicator_sign({g, BigInt("7276890316")}, cfg).sign == Sign::Positive);
}

TEST_CASE("a low precision ceiling near the nullcline is reported") {
  GameParams g = GameParams::parse("1e-10", "2e-10");
  PrecisionConfig low;
  low.working_digits = 4;
  low.max_digits = 8;
  CHECK_THROWS_AS(indicator_sign_with({g, BigInt("7276890317")}, Strategy::Quadrature, low),
                  UncertifiedSign);
}

TEST_CASE("estimates carry honest error bounds") {
  GameParams g = GameParams::parse("0.18", "0.2");
  Estimate r = recurrence_estimate(g, BigInt(25), 30);
  CHECK(r.value.sign() > 0);
  CHECK(r.error < abs(r.value));
  Estimate q = quadrature_estimate(g, BigInt(26), 30);
  CHECK(q.value.sign() < 0);
  CHECK(q.error < abs(q.value));
}

TEST_CASE("strategy names") {
  CHECK(to_string(Strategy::Auto) == "auto");
  CHECK(to_string(Strategy::Quadrature) == "quadrature");
}
