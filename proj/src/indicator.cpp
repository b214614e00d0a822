#include "coinduel/indicator.hpp"

#include <cmath>

#include "coinduel/errors.hpp"
#include "coinduel/exact_oracle.hpp"
#include "coinduel/interval.hpp"
#include "coinduel/legendre.hpp"

namespace coinduel {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Exact: return "exact";
    case Strategy::Recurrence: return "recurrence";
    case Strategy::Quadrature: return "quadrature";
  }
  return "?";
}

namespace {

unsigned long to_ulong(const BigInt& n) {
  if (!n.fits_ulong_p()) throw InvalidInput("n too large for this strategy");
  return n.get_ui();
}

// Extra digits so that u and rho, which grow like 1/(1-p-q), keep enough
// significant digits when the point sits close to the diagonal.
int diagonal_guard(const GameParams& g, int working_digits) {
  double m = g.margin().to_double();
  if (m <= 0 || m >= std::pow(10.0, -working_digits / 2.0)) return 0;
  return static_cast<int>(std::ceil(-std::log10(m)));
}

CertifiedSign exact_sign(const GameParams& g, const BigInt& n) {
  return CertifiedSign::exact(exact_indicator(g, to_ulong(n)).sign());
}

CertifiedSign recurrence_sign(const GameParams& g, const BigInt& n,
                              const PrecisionConfig& cfg) {
  const unsigned long steps = to_ulong(n) + 1;
  Transform t(g);
  // Fast path in doubles.
  DoubleInterval u = DoubleInterval::from_rational(t.u());
  DoubleInterval rho = DoubleInterval::from_rational(t.rho());
  DoubleRatioResult r = ratio_enclosure(steps, u);
  if (r.ok) {
    if (r.r.hi < rho.lo) return {Sign::Positive, SignMethod::HighPrecisionRecurrence, 15};
    if (r.r.lo > rho.hi) return {Sign::Negative, SignMethod::HighPrecisionRecurrence, 15};
  }
  PrecisionConfig c = cfg;
  c.working_digits = std::min(cfg.max_digits,
                              cfg.working_digits + diagonal_guard(g, cfg.working_digits));
  return certify_sign([&](int digits) { return recurrence_estimate(g, n, digits); }, c,
                      SignMethod::HighPrecisionRecurrence);
}

CertifiedSign quadrature_sign(const GameParams& g, const BigInt& n,
                              const PrecisionConfig& cfg) {
  PrecisionConfig c = cfg;
  c.working_digits = std::min(cfg.max_digits,
                              cfg.working_digits + diagonal_guard(g, cfg.working_digits));
  return certify_sign([&](int digits) { return quadrature_estimate(g, n, digits); }, c,
                      SignMethod::Quadrature);
}

}  // namespace

Estimate recurrence_estimate(const GameParams& params, const BigInt& n, int digits) {
  const Bits bits = digits_to_bits(digits);
  Transform t(params);
  RealInterval u(t.u(), bits);
  RealInterval rho(t.rho(), bits);
  RealInterval r = ratio_enclosure(to_ulong(n) + 1, u);
  return (rho - r).to_estimate();
}

Estimate quadrature_estimate(const GameParams& params, const BigInt& n, int digits) {
  const Bits bits = digits_to_bits(digits);
  const Rational& p = params.p();
  const Rational& q = params.q();
  const Rational one(1);
  Real alpha(Rational(2) * q * (one - p), bits);
  Real beta = sqrt(Real(p * q * (one - p) * (one - q), bits)) * 2;
  Real base(params.margin() + Rational(2) * p * q, bits);
  Real c = beta / (base + beta);
  CosPowerIntegral r = cos_power_integral(n, c, alpha, beta, digits);
  return {r.value, r.error};
}

CertifiedSign indicator_sign_with(const IndicatorQuery& query, Strategy strategy,
                                  const PrecisionConfig& cfg) {
  IndicatorConfig ic;
  ic.precision = cfg;
  const GameParams& g0 = query.params;
  const BigInt& n = query.n;
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n == 0) return CertifiedSign::exact(1);  // J_0 = y > 0
  if (g0.on_diagonal()) {
    // z = 1 here, so J_n = C(2n,n) (q/(1-q) - n/(n+1))
    Rational s = g0.q() * Rational(BigInt(2 * n + 1)) - Rational(n);
    return CertifiedSign::exact(s.sign());
  }
  const GameParams g = canonical(g0);
  switch (strategy) {
    case Strategy::Exact:
      return exact_sign(g, n);
    case Strategy::Recurrence:
      return recurrence_sign(g, n, cfg);
    case Strategy::Quadrature:
      return quadrature_sign(g, n, cfg);
    case Strategy::Auto:
      break;
  }
  return indicator_sign(query, ic);
}

CertifiedSign indicator_sign(const IndicatorQuery& query, const IndicatorConfig& cfg) {
  const BigInt& n = query.n;
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n == 0 || query.params.on_diagonal()) {
    return indicator_sign_with(query, Strategy::Exact, cfg.precision);
  }
  const GameParams g = canonical(query.params);
  if (n <= cfg.exact_cutoff) return exact_sign(g, n);
  try {
    if (n <= cfg.recurrence_cutoff) return recurrence_sign(g, n, cfg.precision);
    return quadrature_sign(g, n, cfg.precision);
  } catch (const UncertifiedSign&) {
    if (n <= cfg.exact_fallback_cutoff) return exact_sign(g, n);
    throw;
  }
}

CertifiedSign indicator_sign(const IndicatorQuery& query, const PrecisionConfig& cfg) {
  IndicatorConfig ic;
  ic.precision = cfg;
  return indicator_sign(query, ic);
}

}  // namespace coinduel
