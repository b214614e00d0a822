#pragma once

// Certified sign of J_n(q,p) = y phi_n(z) - psi_n(z), whose sign is the sign
// of f(n+1) - f(n), for n anywhere from 0 to far beyond machine integers.

#include "coinduel/model.hpp"
#include "coinduel/numerics.hpp"

namespace coinduel {

struct IndicatorQuery {
  GameParams params;
  BigInt n;
};

enum class Strategy { Auto, Exact, Recurrence, Quadrature };

std::string_view to_string(Strategy s);

struct IndicatorConfig {
  PrecisionConfig precision;
  /// Largest n decided by exact rational evaluation.
  unsigned long exact_cutoff = 500;
  /// Largest n decided by the ratio recurrence; quadrature beyond.
  unsigned long recurrence_cutoff = 10000000;
  /// When an approximate path cannot certify (J_n may be exactly zero), n up
  /// to this size is retried exactly.
  unsigned long exact_fallback_cutoff = 5000;
};

/// Dispatch:
///   p + q = 1     sign of q(2n+1) - n, exactly
///   p + q > 1     reflect to (1-p, 1-q)
///   n small       exact rational J_n
///   n moderate    ratio recurrence, J_n > 0 iff r_{n+1}(u) < rho
///   otherwise     quadrature of (K(t)^n (alpha - beta cos t)) over [0, pi]
/// Throws UncertifiedSign when the approximate paths run out of precision.
CertifiedSign indicator_sign(const IndicatorQuery& query, const IndicatorConfig& cfg);
CertifiedSign indicator_sign(const IndicatorQuery& query, const PrecisionConfig& cfg);

/// Forces one strategy (used to cross-check them). Diagonal points and n = 0
/// are always decided exactly.
CertifiedSign indicator_sign_with(const IndicatorQuery& query, Strategy strategy,
                                  const PrecisionConfig& cfg);

/// rho - r_{n+1}(u) from outward-rounded intervals at `digits` digits; same
/// sign as J_n inside the triangle.
Estimate recurrence_estimate(const GameParams& params, const BigInt& n, int digits);

/// (1/pi) int_0^pi K(t)^n (alpha - beta cos t) dt with alpha = 2q(1-p),
/// beta = 2 sqrt(pq(1-p)(1-q)) and K(t) = 1 - c(1 - cos t),
/// c = beta / (1 - p - q + 2pq + beta). This is J_n up to a positive factor.
Estimate quadrature_estimate(const GameParams& params, const BigInt& n, int digits);

}  // namespace coinduel
