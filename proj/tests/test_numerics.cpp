#include "doctest.h"

#include "coinduel/errors.hpp"
#include "coinduel/interval.hpp"
#include "coinduel/numerics.hpp"

using namespace coinduel;

TEST_CASE("probabilities parse exactly") {
  CHECK(parse_probability("0.18") == Rational(9, 50));
  CHECK(parse_probability("1e-5") == Rational(1, 100000));
  CHECK(parse_probability("2.5E-30") == Rational(BigInt(1), BigInt("400000000000000000000000000000")));
  CHECK(parse_probability("1/3") == Rational(1, 3));
  CHECK(parse_probability("  0.5 ") == Rational(1, 2));
}

TEST_CASE("bad probabilities are rejected") {
  CHECK_THROWS_AS(parse_probability("0"), InvalidInput);
  CHECK_THROWS_AS(parse_probability("1"), InvalidInput);
  CHECK_THROWS_AS(parse_probability("1.5"), InvalidInput);
  CHECK_THROWS_AS(parse_probability("-0.2"), InvalidInput);
  CHECK_THROWS_AS(parse_probability("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_probability("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_probability(""), InvalidInput);
}

TEST_CASE("big integers") {
  BigInt n = parse_bigint("727689031794675988529598753552");
  CHECK(to_string(n) == "727689031794675988529598753552");
  CHECK_THROWS_AS(parse_bigint("12x"), InvalidInput);
}

TEST_CASE("rational floor, ceil and rendering") {
  Rational r(7, 2);
  CHECK(r.floor() == 3);
  CHECK(r.ceil() == 4);
  CHECK((-r).floor() == -4);
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(1, 8).to_decimal_string() == "0.125");
  CHECK(Rational(18, 125).to_fraction_string() == "18/125");
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
}

TEST_CASE("precision config validation") {
  PrecisionConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.working_digits = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg.working_digits = 50;
  cfg.max_digits = 10;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
}

TEST_CASE("certify_sign escalates until the value clears its error") {
  int calls = 0;
  Evaluator ev = [&](int digits) {
    ++calls;
    Bits b = digits_to_bits(digits);
    // value 1e-30, error 10^-digits
    Real v = Real::from_string("1e-30", b);
    Real e = Real::from_string("1e-" + std::to_string(digits), b);
    return Estimate{v, e};
  };
  PrecisionConfig cfg;
  cfg.working_digits = 10;
  CertifiedSign s = certify_sign(ev, cfg);
  CHECK(s.sign == Sign::Positive);
  CHECK(s.digits_used >= 40);
  CHECK(calls == 3);
}

TEST_CASE("certify_sign gives up at the ceiling") {
  Evaluator ev = [](int digits) {
    Bits b = digits_to_bits(digits);
    return Estimate{Real(0L, b), Real(1e-5, b)};
  };
  PrecisionConfig cfg;
  cfg.working_digits = 10;
  cfg.max_digits = 80;
  CHECK_THROWS_AS(certify_sign(ev, cfg), UncertifiedSign);
}

TEST_CASE("outward-rounded intervals enclose exact values") {
  RealInterval third(Rational(1, 3), 64);
  CHECK(third.lo() < third.hi());
  RealInterval sum = third + third + third;
  CHECK(sum.contains(Real(1L, 64)));
  RealInterval prod = third * 3L;
  CHECK(prod.contains(Real(1L, 64)));
  CHECK((third - third).certain_sign() == 0);
  CHECK(third.certain_sign() == 1);

  DoubleInterval d = DoubleInterval::from_rational(Rational(1, 10));
  CHECK(d.lo <= 0.1);
  CHECK(d.hi >= 0.1);
  CHECK(d.lo < d.hi);
  DoubleInterval e = DoubleInterval::from_rational(Rational(1, 4));
  CHECK(e.lo == 0.25);
  CHECK(e.hi == 0.25);
}
