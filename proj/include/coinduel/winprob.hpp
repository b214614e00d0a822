#pragma once

// f(n) for moderate and large n through the telescoped Legendre sum
//   f(n) = (1 - m^n P_n(u) - (p-q) sum_{k<n} m^k P_k(u)) / 2,  m = 1-p-q,
// evaluated with the three-term recurrence for
//   Y_n = 1/m + sum_{k<n} m^k P_k(u).

#include <vector>

#include "coinduel/model.hpp"
#include "coinduel/numerics.hpp"

namespace coinduel {

struct WinProbEntry {
  unsigned long n = 0;
  Real f;
  Real abs_error;
};

struct WinProbSeries {
  GameParams params;
  std::vector<WinProbEntry> values;
  int digits_used = 0;

  /// Smallest n whose value is largest (by the computed values).
  unsigned long argmax() const;
};

/// Y_n, Y_{n-1}, Y_{n-2}.
struct YState {
  long n = 1;
  Real y;
  Real y1;
  Real y2;
};

/// Coefficients of
///   (n-1)Y_n = (a0 + n a1) Y_{n-1} - (b0 + n b1) Y_{n-2} + (n-2) c Y_{n-3}.
struct YCoefficients {
  Real a0, a1, b0, b1, c;
};

YCoefficients y_coefficients(const GameParams& params, Bits bits);

/// State at n = 1: Y_1 = 1 + 1/m, Y_0 = 1/m, Y_{-1} = 0.
/// Throws DiagonalDomain when p + q = 1.
YState y_seed(const GameParams& params, Bits bits);

/// One step of the recurrence; returns the state at n+1.
YState y_advance(const YState& state, const YCoefficients& coeffs);
YState y_advance(const YState& state, const GameParams& params);

/// Largest n_max accepted by f_series.
inline constexpr unsigned long kMaxSeriesLength = 1000000;

/// f(0..n_max). Values come from the Y recurrence; each error bound is the
/// distance to the far end of an outward-rounded enclosure obtained from the
/// product form m^k P_k = prod_{i<=k} m r_i. Points with p + q > 1 are
/// evaluated at their reflection, which leaves f unchanged. Precision
/// escalates until every error is below 10^-cfg.working_digits.
WinProbSeries f_series(const GameParams& params, unsigned long n_max,
                       const PrecisionConfig& cfg);

}  // namespace coinduel
