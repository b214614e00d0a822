#pragma once

// Sampling the triangle T = {0 < q < p, p + q < 1}: N-maps, Delta-maps,
// bound-agreement statistics and the harmonic rescaling (p+q, 1/(p-q)).

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "coinduel/model.hpp"

namespace coinduel {

struct RegionSample {
  double q = 0;
  double p = 0;
  /// -1 when N exceeded the cap.
  long N = -1;
  long delta = 0;
  /// floor(1/(2(p-q)) + 1/2) = ceil(max(1-p, q)/(p-q)).
  bool bounds_agree = false;
  /// N equals the piecewise lower bound max(strict simple, linear).
  bool lower_correct = false;
  /// N^- = N^+.
  bool improved_agree = false;
  /// H = N.
  bool h_correct = false;
  /// The upper bound equals the piecewise lower bound.
  bool determined = false;
  /// N = max(linear, floor(1/(2(p-q)) - 1/2)), the weak-floor variant.
  bool lower_weak_correct = false;
  /// N = N^-.
  bool minus_correct = false;
  bool capped = false;
};

enum class SampleMode { Grid, MonteCarlo };

struct RegionOptions {
  SampleMode mode = SampleMode::MonteCarlo;
  /// Number of samples (Monte Carlo) or points per axis (grid).
  long count = 10000;
  std::uint64_t seed = 1;
  /// Points whose N would exceed this are flagged instead of solved.
  long n_cap = 100000;
  int threads = 1;
};

/// Deterministic for a fixed seed and count, whatever the thread count:
/// samples are drawn in fixed-size chunks, each with its own seeded stream.
/// Throws BoundViolation if any sample's N falls outside its bounds.
std::vector<RegionSample> sample_region(const RegionOptions& options);

/// One point, given exactly.
RegionSample classify(const GameParams& params, long n_cap);

/// N for a point of T by scanning the ratio recurrence in double intervals
/// from n = 1; falls back to the certified optimizer when the enclosure
/// cannot decide. Returns -1 past n_cap.
long fast_optimal_n(const GameParams& params, long n_cap);

struct Fraction {
  long hits = 0;
  long total = 0;
  double value() const { return total ? static_cast<double>(hits) / total : 0.0; }
  /// Binomial standard error.
  double sigma() const;
};

struct RegionSummary {
  long samples = 0;
  long capped = 0;
  Fraction bounds_agree;
  Fraction determined;
  Fraction lower_correct;
  Fraction lower_weak_correct;
  Fraction improved_agree;
  Fraction h_correct;
  Fraction minus_correct;
};

/// Capped samples are left out of every denominator except bounds_agree and
/// determined, which do not depend on N.
RegionSummary summarize(const std::vector<RegionSample>& samples);

/// Header q,p,N,delta,bounds_agree,lower_correct,improved_agree,h_correct.
/// Capped rows leave N, delta and the N-dependent flags empty.
void write_csv(std::ostream& os, const std::vector<RegionSample>& samples,
               int digits = 17);

enum class SvgField { N, Delta, BoundsAgree, LowerCorrect, ImprovedAgree, HCorrect };

/// Scatter plot of the samples over T, one small square per sample.
void write_svg(std::ostream& os, const std::vector<RegionSample>& samples,
               SvgField field, int size = 600);

struct RescaledPoint {
  double s = 0;
  double h = 0;
};

/// (q, p) -> (p + q, 1/(p - q)). Throws DegenerateDiagonal when p = q.
RescaledPoint rescale(double q, double p);
RescaledPoint rescale(const GameParams& params);
/// Inverse map back to (q, p).
std::pair<double, double> unrescale(const RescaledPoint& point);

/// Uniform samples of the rescaled band h in (1, h_max), s in (1/h, 1).
std::vector<RegionSample> sample_rescaled(double h_max, long count, std::uint64_t seed,
                                          long n_cap, int threads = 1);

}  // namespace coinduel
