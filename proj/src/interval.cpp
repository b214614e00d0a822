#include "coinduel/interval.hpp"

#include <cmath>
#include <limits>

namespace coinduel {

RealInterval::RealInterval(Bits bits) : lo_(bits), hi_(bits) {}

RealInterval::RealInterval(const Rational& value, Bits bits)
    : lo_(value, bits, MPFR_RNDD), hi_(value, bits, MPFR_RNDU) {}

RealInterval::RealInterval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

int RealInterval::certain_sign() const {
  if (lo_.sign() > 0) return 1;
  if (hi_.sign() < 0) return -1;
  return 0;
}

Estimate RealInterval::to_estimate() const {
  Bits bits = precision() + 2;
  Real mid(bits), rad(bits);
  mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  // max(mid - lo, hi - mid), rounded up
  Real a(bits), b(bits);
  mpfr_sub(a.get(), mid.get(), lo_.get(), MPFR_RNDU);
  mpfr_sub(b.get(), hi_.get(), mid.get(), MPFR_RNDU);
  mpfr_max(rad.get(), a.get(), b.get(), MPFR_RNDU);
  return {mid, rad};
}

RealInterval RealInterval::operator-() const {
  RealInterval out(precision());
  mpfr_neg(out.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(out.hi_.get(), lo_.get(), MPFR_RNDU);
  return out;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  RealInterval out(std::max(a.precision(), b.precision()));
  mpfr_add(out.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(out.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return out;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  RealInterval out(std::max(a.precision(), b.precision()));
  mpfr_sub(out.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(out.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return out;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  Bits bits = std::max(a.precision(), b.precision());
  RealInterval out(bits);
  Real t(bits);
  mpfr_srcptr xs[2] = {a.lo_.get(), a.hi_.get()};
  mpfr_srcptr ys[2] = {b.lo_.get(), b.hi_.get()};
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || t < out.lo_) mpfr_set(out.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || t > out.hi_) mpfr_set(out.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

RealInterval operator*(const RealInterval& a, long k) {
  RealInterval out(a.precision());
  if (k >= 0) {
    mpfr_mul_si(out.lo_.get(), a.lo_.get(), k, MPFR_RNDD);
    mpfr_mul_si(out.hi_.get(), a.hi_.get(), k, MPFR_RNDU);
  } else {
    mpfr_mul_si(out.lo_.get(), a.hi_.get(), k, MPFR_RNDD);
    mpfr_mul_si(out.hi_.get(), a.lo_.get(), k, MPFR_RNDU);
  }
  return out;
}

RealInterval operator/(const RealInterval& a, long k) {
  RealInterval out(a.precision());
  mpfr_div_si(out.lo_.get(), a.lo_.get(), k, MPFR_RNDD);
  mpfr_div_si(out.hi_.get(), a.hi_.get(), k, MPFR_RNDU);
  return out;
}

DoubleInterval DoubleInterval::from_rational(const Rational& value) {
  // mpq_get_d truncates toward zero
  const double inf = std::numeric_limits<double>::infinity();
  double d = value.to_double();
  if (!std::isfinite(d)) {
    const double big = std::numeric_limits<double>::max();
    return value.sign() > 0 ? DoubleInterval{big, inf} : DoubleInterval{-inf, -big};
  }
  if (Rational::from_double(d) == value) return {d, d};
  if (value.sign() > 0) return {d, std::nextafter(d, inf)};
  return {std::nextafter(d, -inf), d};
}

}  // namespace coinduel
