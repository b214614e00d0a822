#include "coinduel/optimizer.hpp"

#include <map>

#include "coinduel/errors.hpp"

namespace coinduel {

int suggested_digits(const BigInt& upper) {
  // mpz_sizeinbase can overshoot by one
  long digits = static_cast<long>(to_string(BigInt(abs(upper))).size());
  return static_cast<int>(2 * digits + 30);
}

OptimalResult optimal_n(const GameParams& params, const OptimizerConfig& cfg) {
  OptimalResult out;
  out.bounds = compute_bounds(params);
  out.reflected = params.margin().sign() < 0;

  if (params.on_diagonal()) {
    out.N = diagonal_n(params.q());
    out.tie = diagonal_tie(params.q());
    return out;
  }
  const GameParams g = canonical(params);

  BigInt lo = out.bounds.lower();
  if (lo < 1) lo = 1;
  BigInt hi = out.bounds.upper();
  if (lo > hi) {
    throw BoundViolation("empty bracket [" + to_string(lo) + ", " + to_string(hi) +
                         "] at " + g.describe());
  }

  std::map<BigInt, Sign> seen;
  auto probe = [&](const BigInt& n) {
    auto it = seen.find(n);
    if (it != seen.end()) return it->second;
    CertifiedSign s = indicator_sign({g, n}, cfg.indicator);
    out.method_trace.push_back({n, s});
    seen.emplace(n, s.sign);
    return s.sign;
  };

  // least n in [lo, hi] with J_n <= 0; J_hi <= 0 is guaranteed by the bound
  while (lo < hi) {
    BigInt mid = (lo + hi) / 2;
    if (probe(mid) != Sign::Positive) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  out.N = lo;

  if (cfg.verify) {
    if (probe(out.N) == Sign::Positive) {
      throw BoundViolation("J_N > 0 at the upper end of the bracket for " + g.describe());
    }
    if (out.N > 1 && probe(BigInt(out.N - 1)) != Sign::Positive) {
      throw BoundViolation("J_{N-1} <= 0 below the lower bound for " + g.describe());
    }
  }
  auto it = seen.find(out.N);
  out.tie = it != seen.end() && it->second == Sign::Zero;
  return out;
}

OptimalResult optimal_n(const GameParams& params, const PrecisionConfig& cfg) {
  OptimizerConfig oc;
  oc.indicator.precision = cfg;
  return optimal_n(params, oc);
}

OptimalResult optimal_n(const GameParams& params) {
  PrecisionConfig cfg;
  cfg.working_digits = suggested_digits(compute_bounds(params).upper());
  if (cfg.working_digits > cfg.max_digits) cfg.max_digits = cfg.working_digits;
  return optimal_n(params, cfg);
}

}  // namespace coinduel
