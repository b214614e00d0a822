#pragma once

// Legendre polynomials P_n in the three forms used by the rest of the
// library: three-term recurrence, ratio recurrence and integral
// representation. Also the binomial-square polynomials phi_n and psi_n.

#include <vector>

#include "coinduel/exact_oracle.hpp"
#include "coinduel/interval.hpp"
#include "coinduel/numerics.hpp"

namespace coinduel {

/// P_n(u) exactly, by (n+1)P_{n+1} = (2n+1)u P_n - n P_{n-1}.
Rational legendre_p(unsigned long n, const Rational& u);

/// P_n(u) at `bits` of precision; the error bound comes from running the
/// same recurrence in outward-rounded interval arithmetic.
Estimate legendre_p(unsigned long n, const Real& u, Bits bits);

/// P_0(u), ..., P_n(u) exactly.
std::vector<Rational> legendre_p_table(unsigned long n, const Rational& u);

/// r_n = P_n(u)/P_{n-1}(u).
struct LegendreRatioState {
  unsigned long n = 1;
  Real r;
  Real u;
};

/// State at n = 1, where r_1 = u.
LegendreRatioState ratio_start(const Real& u);

/// r_{n+1} = (2n+1)u/(n+1) - n/((n+1) r_n). Throws InvalidInput when r_n = 0.
LegendreRatioState ratio_advance(const LegendreRatioState& state);

struct ExactRatioState {
  unsigned long n = 1;
  Rational r;
  Rational u;
};

ExactRatioState ratio_start(const Rational& u);
ExactRatioState ratio_advance(const ExactRatioState& state);

/// Enclosure of r_{n+1}(u) for u > 1, from an enclosure of u. The map
/// r -> A - B/r is increasing in both r and u, so the bounds are carried
/// through with directed rounding and never cross.
RealInterval ratio_enclosure(unsigned long n_plus_1, const RealInterval& u);
/// One outward-rounded step: encloses r_{k+1} given enclosures of u and r_k.
RealInterval ratio_step(unsigned long k, const RealInterval& u, const RealInterval& r_k);

/// Same in doubles, widened by one ulp per operation. `ok` is false when the
/// enclosure blew up before reaching n_plus_1.
struct DoubleRatioResult {
  DoubleInterval r;
  bool ok = true;
};
DoubleRatioResult ratio_enclosure(unsigned long n_plus_1, const DoubleInterval& u);
/// One step in doubles; requires r_k.lo > 0.
DoubleInterval ratio_step(unsigned long k, const DoubleInterval& u, const DoubleInterval& r_k);

/// phi_n(z) = sum_r C(n,r)^2 z^r.
Rational phi(unsigned n, const Rational& z);
Real phi(unsigned n, const Real& z);

/// psi_n(z) = sum_r C(n,r+1) C(n,r) z^(r+1).
Rational psi(unsigned n, const Rational& z);
Real psi(unsigned n, const Real& z);

/// (1/pi) int_0^pi (1 - c(1 - cos t))^n (alpha - beta cos t) dt for
/// 0 <= c <= 1/2, alpha, beta >= 0, with a bound on the absolute error.
///
/// Uses the trapezoidal rule on the full period, whose error for an integrand
/// analytic in the strip |Im t| < a and bounded there by M is at most
/// 2M/(e^{aN} - 1). The strip width is chosen per call; nodes past the point
/// where the integrand has decayed below the target are bounded instead of
/// evaluated, so the cost does not grow with n.
struct CosPowerIntegral {
  Real value;
  Real error;
  /// Points of the periodic rule (may be astronomically large).
  Real points;
  /// Nodes actually evaluated.
  long evaluated = 0;
};
CosPowerIntegral cos_power_integral(const BigInt& n, const Real& c,
                                    const Real& alpha, const Real& beta,
                                    int digits);

/// Integral representation P_n(u) = (1/pi) int_0^pi (u + sqrt(u^2-1) cos t)^n dt
/// for u > 1, returned as mantissa * exp(log_scale) with
/// log_scale = n log(u + sqrt(u^2-1)), so that huge n cannot overflow.
struct ScaledIntegral {
  Real mantissa;
  Real error;
  Real log_scale;
  int digits_used = 0;
};

/// Escalates from cfg.working_digits until the relative error is below
/// 10^-digits; throws QuadratureFailure past cfg.max_digits.
ScaledIntegral legendre_integral(const BigInt& n, const Real& u,
                                 const PrecisionConfig& cfg);
/// Variant taking sqrt(u^2-1) precomputed in a cancellation-free form.
ScaledIntegral legendre_integral(const BigInt& n, const Real& u,
                                 const Real& root_u2m1,
                                 const PrecisionConfig& cfg);

}  // namespace coinduel
