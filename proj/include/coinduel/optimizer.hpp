#pragma once

// Exact optimal game length N(q,p): the least n with J_n <= 0, found by
// bisection between the analytic bounds.

#include <vector>

#include "coinduel/bounds.hpp"
#include "coinduel/indicator.hpp"

namespace coinduel {

struct Probe {
  BigInt n;
  CertifiedSign sign;
};

struct OptimalResult {
  BigInt N;
  BoundSet bounds;
  std::vector<Probe> method_trace;
  /// J_N = 0 exactly, so f(N) = f(N+1) and N is the smaller maximizer.
  bool tie = false;
  /// True when the point was reflected into the triangle first.
  bool reflected = false;
};

struct OptimizerConfig {
  IndicatorConfig indicator;
  /// After bisection, re-check J_{N-1} > 0 and J_N <= 0 when those were not
  /// already probed.
  bool verify = true;
};

/// Throws UncertifiedSign if an indicator sign cannot be certified, and
/// BoundViolation if the signs contradict the bracket.
OptimalResult optimal_n(const GameParams& params, const OptimizerConfig& cfg);
OptimalResult optimal_n(const GameParams& params, const PrecisionConfig& cfg);
OptimalResult optimal_n(const GameParams& params);

/// Digits suggested for a bracket whose upper end is `upper`:
/// 2 log10(upper) + 30.
int suggested_digits(const BigInt& upper);

}  // namespace coinduel
