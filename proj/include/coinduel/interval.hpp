#pragma once

// Closed intervals with outward rounding. Used wherever a recurrence has to
// report an error bound that does not depend on trusting the rounding model.

#include "coinduel/numerics.hpp"

namespace coinduel {

class RealInterval {
 public:
  explicit RealInterval(Bits bits = 64);
  /// Smallest representable enclosure of an exact rational.
  RealInterval(const Rational& value, Bits bits);
  RealInterval(Real lo, Real hi);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  Bits precision() const { return lo_.precision(); }

  /// +1 / -1 when the whole interval lies strictly on one side of zero, else 0.
  int certain_sign() const;
  bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }
  /// Midpoint with an upper bound on the half width.
  Estimate to_estimate() const;

  RealInterval operator-() const;
  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, long k);
  /// Division by a positive integer.
  friend RealInterval operator/(const RealInterval& a, long k);

 private:
  Real lo_;
  Real hi_;
};

/// Double-precision interval, widened by one ulp after every operation. Much
/// faster than RealInterval and good enough when the enclosure stays narrow.
struct DoubleInterval {
  double lo = 0.0;
  double hi = 0.0;

  static DoubleInterval from_rational(const Rational& value);
  int certain_sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
};

}  // namespace coinduel
