#include "coinduel/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coinduel/errors.hpp"

namespace coinduel {

Rational legendre_p(unsigned long n, const Rational& u) {
  if (n == 0) return Rational(1);
  Rational prev(1), cur = u;
  for (unsigned long k = 1; k < n; ++k) {
    Rational next = (Rational(static_cast<long>(2 * k + 1)) * u * cur -
                     Rational(static_cast<long>(k)) * prev) /
                    Rational(static_cast<long>(k + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> legendre_p_table(unsigned long n, const Rational& u) {
  std::vector<Rational> out;
  out.reserve(n + 1);
  out.emplace_back(1);
  if (n >= 1) out.push_back(u);
  for (unsigned long k = 1; k < n; ++k) {
    out.push_back((Rational(static_cast<long>(2 * k + 1)) * u * out[k] -
                   Rational(static_cast<long>(k)) * out[k - 1]) /
                  Rational(static_cast<long>(k + 1)));
  }
  return out;
}

Estimate legendre_p(unsigned long n, const Real& u, Bits bits) {
  Real lo(bits), hi(bits);
  mpfr_set(lo.get(), u.get(), MPFR_RNDD);
  mpfr_set(hi.get(), u.get(), MPFR_RNDU);
  RealInterval uu(lo, hi);
  RealInterval prev(Rational(1), bits);
  if (n == 0) return prev.to_estimate();
  RealInterval cur = uu;
  for (unsigned long k = 1; k < n; ++k) {
    RealInterval next = ((uu * cur) * static_cast<long>(2 * k + 1) -
                         prev * static_cast<long>(k)) /
                        static_cast<long>(k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur.to_estimate();
}

LegendreRatioState ratio_start(const Real& u) { return {1, u, u}; }

LegendreRatioState ratio_advance(const LegendreRatioState& s) {
  if (s.r.is_zero()) throw InvalidInput("ratio recurrence hit r_n = 0");
  const long n = static_cast<long>(s.n);
  Real next = s.u * (2 * n + 1) / (n + 1) - Real(n, s.r.precision()) / (s.r * (n + 1));
  return {s.n + 1, next, s.u};
}

ExactRatioState ratio_start(const Rational& u) { return {1, u, u}; }

ExactRatioState ratio_advance(const ExactRatioState& s) {
  if (s.r.sign() == 0) throw InvalidInput("ratio recurrence hit r_n = 0");
  const long n = static_cast<long>(s.n);
  Rational next = Rational(2 * n + 1) * s.u / Rational(n + 1) -
                  Rational(n) / (Rational(n + 1) * s.r);
  return {s.n + 1, next, s.u};
}

RealInterval ratio_step(unsigned long k, const RealInterval& u, const RealInterval& r_k) {
  const Bits bits = std::max(u.precision(), r_k.precision());
  Real lo(bits), hi(bits), a(bits), t(bits);
  if (r_k.lo().sign() <= 0) {
    mpfr_set_inf(hi.get(), 1);
    mpfr_set_inf(lo.get(), -1);
    return RealInterval(lo, hi);
  }
  // lower end: A rounded down minus B/r rounded up
  mpfr_mul_ui(a.get(), u.lo().get(), 2 * k + 1, MPFR_RNDD);
  mpfr_div_ui(a.get(), a.get(), k + 1, MPFR_RNDD);
  mpfr_mul_ui(t.get(), r_k.lo().get(), k + 1, MPFR_RNDD);
  mpfr_ui_div(t.get(), k, t.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), a.get(), t.get(), MPFR_RNDD);
  // upper end
  mpfr_mul_ui(a.get(), u.hi().get(), 2 * k + 1, MPFR_RNDU);
  mpfr_div_ui(a.get(), a.get(), k + 1, MPFR_RNDU);
  mpfr_mul_ui(t.get(), r_k.hi().get(), k + 1, MPFR_RNDU);
  mpfr_ui_div(t.get(), k, t.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.get(), t.get(), MPFR_RNDU);
  return RealInterval(lo, hi);
}

RealInterval ratio_enclosure(unsigned long n_plus_1, const RealInterval& u) {
  // Same arithmetic as ratio_step, in place to avoid per-step allocation.
  const Bits bits = u.precision();
  Real lo = u.lo(), hi = u.hi();
  Real a(bits), t(bits);
  for (unsigned long k = 1; k < n_plus_1; ++k) {
    if (lo.sign() <= 0) {
      mpfr_set_inf(lo.get(), -1);
      mpfr_set_inf(hi.get(), 1);
      break;
    }
    mpfr_mul_ui(a.get(), u.lo().get(), 2 * k + 1, MPFR_RNDD);
    mpfr_div_ui(a.get(), a.get(), k + 1, MPFR_RNDD);
    mpfr_mul_ui(t.get(), lo.get(), k + 1, MPFR_RNDD);
    mpfr_ui_div(t.get(), k, t.get(), MPFR_RNDU);
    mpfr_sub(lo.get(), a.get(), t.get(), MPFR_RNDD);
    mpfr_mul_ui(a.get(), u.hi().get(), 2 * k + 1, MPFR_RNDU);
    mpfr_div_ui(a.get(), a.get(), k + 1, MPFR_RNDU);
    mpfr_mul_ui(t.get(), hi.get(), k + 1, MPFR_RNDU);
    mpfr_ui_div(t.get(), k, t.get(), MPFR_RNDD);
    mpfr_sub(hi.get(), a.get(), t.get(), MPFR_RNDU);
  }
  return RealInterval(lo, hi);
}

DoubleInterval ratio_step(unsigned long k, const DoubleInterval& u, const DoubleInterval& r) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto down = [](double x) { return std::nextafter(x, -inf); };
  auto up = [](double x) { return std::nextafter(x, inf); };
  const double kd = static_cast<double>(k);
  double a_lo = down(down((2 * kd + 1) * u.lo) / (kd + 1));
  double a_hi = up(up((2 * kd + 1) * u.hi) / (kd + 1));
  double b_hi = up(kd / down((kd + 1) * r.lo));
  double b_lo = down(kd / up((kd + 1) * r.hi));
  return {down(a_lo - b_hi), up(a_hi - b_lo)};
}

DoubleRatioResult ratio_enclosure(unsigned long n_plus_1, const DoubleInterval& u) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  DoubleInterval r = u;
  for (unsigned long k = 1; k < n_plus_1; ++k) {
    if (!(r.lo > 0)) return {{-inf, inf}, false};
    r = ratio_step(k, u, r);
  }
  return {r, std::isfinite(r.lo) && std::isfinite(r.hi)};
}

Rational phi(unsigned n, const Rational& z) {
  const auto& C = binomial_row(n);
  Rational acc(0);
  for (unsigned r = n + 1; r-- > 0;) acc = acc * z + Rational(BigInt(C[r] * C[r]));
  return acc;
}

Real phi(unsigned n, const Real& z) {
  const auto& C = binomial_row(n);
  const Bits bits = z.precision();
  Real acc(bits);
  for (unsigned r = n + 1; r-- > 0;) acc = acc * z + Real(BigInt(C[r] * C[r]), bits);
  return acc;
}

Rational psi(unsigned n, const Rational& z) {
  if (n == 0) return Rational(0);
  const auto& C = binomial_row(n);
  Rational acc(0);
  for (unsigned r = n; r-- > 0;) acc = acc * z + Rational(BigInt(C[r + 1] * C[r]));
  return acc * z;
}

Real psi(unsigned n, const Real& z) {
  const Bits bits = z.precision();
  if (n == 0) return Real(bits);
  const auto& C = binomial_row(n);
  Real acc(bits);
  for (unsigned r = n; r-- > 0;) acc = acc * z + Real(BigInt(C[r + 1] * C[r]), bits);
  return acc * z;
}

namespace {

// Upper bound on ln of the number of trapezoid points needed for strip
// half-width a: ln(2M/eps + 1) <= max(L, 0) + 1 with
// L = ln 2 + lambda x + ln(1 + gamma x) - ln(eps / S), x = cosh a - 1.
double points_needed(double a, double lambda, double gamma, double log_rel_eps) {
  double x = 2 * std::sinh(a / 2) * std::sinh(a / 2);
  double L = std::log(2.0) + lambda * x + std::log1p(gamma * x) - log_rel_eps;
  return (std::max(L, 0.0) + 1) / a;
}

}  // namespace

CosPowerIntegral cos_power_integral(const BigInt& n, const Real& c,
                                    const Real& alpha, const Real& beta,
                                    int digits) {
  if (n < 0) throw InvalidInput("negative exponent in cos_power_integral");
  if (c.sign() < 0 || alpha.sign() < 0 || beta.sign() < 0) {
    throw InvalidInput("cos_power_integral needs c, alpha, beta >= 0");
  }
  const Bits bits = digits_to_bits(digits) + 32;
  const Bits input_bits =
      std::min({c.precision(), alpha.precision(), beta.precision(), bits});
  Real scale = alpha + beta;  // bounds |alpha - beta cos t|

  CosPowerIntegral out{Real(bits), Real(bits), Real(1L, bits), 0};
  if (n == 0 || c.is_zero() || scale.is_zero()) {
    mpfr_set(out.value.get(), alpha.get(), MPFR_RNDN);
    mpfr_mul_2si(out.error.get(), alpha.get(), -(input_bits - 2), MPFR_RNDU);
    return out;
  }

  const Real nr(n, bits);
  const double lambda = (nr * c).to_double();
  if (!(lambda < 1e300)) throw QuadratureFailure("n*c out of range for quadrature");
  const double gamma = (beta / scale).to_double();
  // Relative target: the integral of K^n alone is about 1/sqrt(1 + 2 pi lambda).
  const double log_rel_eps =
      -digits * std::log(10.0) - 0.5 * std::log1p(2 * M_PI * lambda);

  // Choose the strip half-width minimizing the point count.
  double best_a = 1, best_n = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 4000; ++i) {
    double a = std::exp(-350.0 + i * (353.0 / 4000));
    double need = points_needed(a, lambda, gamma, log_rel_eps);
    if (need < best_n) best_n = need, best_a = a;
  }
  if (!(best_n < 1e300)) throw QuadratureFailure("trapezoid rule point count overflow");
  double points = 2 * std::ceil(std::ceil(best_n) / 2);
  if (points < 4) points = 4;

  Real N(points, bits);
  Real a(best_a, bits);
  out.points = N;

  // Discretization bound 2 M / (e^{aN} - 1), with
  // M = (1 + c (cosh a - 1))^n (alpha + beta cosh a).
  {
    Real ch = cosh(a);
    Real logM = nr * log1p(c * (ch - 1)) + log(alpha + beta * ch);
    Real denom = expm1(a * N);
    Real disc = exp(logM) * 2 / denom;
    mpfr_mul_2si(disc.get(), disc.get(), 1, MPFR_RNDU);  // slack for rounding
    out.error = disc;
  }

  const Real h = pi(bits) * 2 / N;
  const Real tail_target =
      scale * exp(Real(log_rel_eps, bits)) / 4;  // absolute: eps/4 in units of S
  Real sum(bits), weight_sum_k(bits), weight_sum_ke(bits);
  Real half_n = N / 2;
  Real j_real(bits);
  for (long j = 0;; ++j) {
    mpfr_set_si(j_real.get(), j, MPFR_RNDN);
    if (j_real > half_n) break;
    if (j > 20000000) throw QuadratureFailure("too many quadrature nodes");
    Real t = h * j_real;
    Real s = sin(t / 2);
    Real e = nr * log1p(c * s * s * (-2));  // n log K(t), K = 1 - 2c sin^2(t/2)
    Real kn = exp(e);
    Real f = kn * (alpha - beta * cos(t));
    long w = (j == 0 || j_real == half_n) ? 1 : 2;
    sum += f * w;
    weight_sum_k += kn * w;
    weight_sum_ke += kn * abs(e) * w;
    ++out.evaluated;
    // Every later node has a smaller K, so the rest of the sum is bounded by
    // the current envelope times a total weight below one.
    Real envelope = kn * scale;
    if (envelope < tail_target) {
      out.error += envelope;
      break;
    }
  }
  out.value = sum / N;

  // Rounding: every node carries a relative error of a few ulps in K and an
  // absolute error of a few ulps of S in alpha - beta cos t; the exponent
  // amplifies relative errors in its arguments by |n log K|.
  Real round = (weight_sum_ke + weight_sum_k * (out.evaluated + 4)) * scale / N;
  mpfr_mul_2si(round.get(), round.get(), -(input_bits - 8), MPFR_RNDU);
  out.error += round;
  return out;
}

namespace {

ScaledIntegral legendre_integral_impl(const BigInt& n, const Real& u,
                                      const Real* root, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!(u > Real(1L, u.precision()))) throw InvalidInput("legendre_integral needs u > 1");
  int digits = cfg.working_digits;
  for (;;) {
    const Bits bits = digits_to_bits(digits) + 32;
    Real uu(bits);
    mpfr_set(uu.get(), u.get(), MPFR_RNDN);
    Real s(bits);
    if (root) {
      mpfr_set(s.get(), root->get(), MPFR_RNDN);
    } else {
      s = sqrt((uu - 1) * (uu + 1));
    }
    Real g0 = uu + s;
    Real c = s / g0;
    CosPowerIntegral q =
        cos_power_integral(n, c, Real(1L, bits), Real(bits), digits + 5);
    Real tol = abs(q.value);
    mpfr_mul_2si(tol.get(), tol.get(), -static_cast<long>(digits_to_bits(digits) - 16),
                 MPFR_RNDN);
    if (q.error <= tol) {
      return {q.value, q.error, Real(n, bits) * log(g0), digits};
    }
    if (digits >= cfg.max_digits) {
      throw QuadratureFailure("legendre_integral: error bound not met at " +
                              std::to_string(digits) + " digits");
    }
    digits = std::min(cfg.max_digits, digits * cfg.escalation_factor);
  }
}

}  // namespace

ScaledIntegral legendre_integral(const BigInt& n, const Real& u,
                                 const PrecisionConfig& cfg) {
  return legendre_integral_impl(n, u, nullptr, cfg);
}

ScaledIntegral legendre_integral(const BigInt& n, const Real& u, const Real& root_u2m1,
                                 const PrecisionConfig& cfg) {
  return legendre_integral_impl(n, u, &root_u2m1, cfg);
}

}  // namespace coinduel
