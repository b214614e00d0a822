#pragma once

// The curves p_n(q) on which J_n vanishes. For each q in (0, n/(2n+1)) there
// is exactly one such p; N(q,p) is the least n with p >= p_n(q).

#include <string>
#include <vector>

#include "coinduel/model.hpp"
#include "coinduel/numerics.hpp"

namespace coinduel {

/// Lines bounding the nullclines: L_n(q) = 1/(2n+1) + q,
/// K_n(q) = 1/(n+1) + nq/(2(n+1)), M_n(q) = 1/(n+1) + nq/(n+1).
double line_L(long n, double q);
double line_K(long n, double q);
double line_M(long n, double q);

/// Slope of p_n at (q, p):
///   p(1-p)(np - nq + p - 1) / (q(1-q)(n(q-p) + q)).
/// The two removable points are filled in: n/(2(n+1)) at (0, 1/(n+1)) and 1
/// at (n/(2n+1), (n+1)/(2n+1)). Any other zero denominator throws
/// SingularDenominator.
double derivative_formula(long n, double q, double p);
Rational derivative_formula(long n, const Rational& q, const Rational& p);

/// The polynomial Z in p_n'' = p(1-p)(1-p-q) Z / (q^2 (q-1)^2 (n(p-q)-q)^3).
double second_derivative_poly(long n, double q, double p);
Rational second_derivative_poly(long n, const Rational& q, const Rational& p);
/// The same polynomial written as a cubic in p (the convexity condition).
Rational inflection_cubic(long n, const Rational& q, const Rational& p);
double inflection_cubic(long n, double q, double p);

double second_derivative(long n, double q, double p);

/// Closed forms for the first two nullclines.
double p1_closed(double q);
/// (1-q)/(2 - 4q + sqrt(1 - 4q + 6q^2)), which is the printed
/// (1-q)(2-4q-sqrt(...))/(3-12q+10q^2) without its removable 0/0 near q = 0.355.
double p2_closed(double q);

struct NullclineSample {
  double q = 0;
  double p = 0;
  double dp_dq = 0;
};

struct TraceOptions {
  /// Local error allowed per accepted step.
  double tolerance = 1e-12;
  double q_start = 1e-8;
  /// Defaults to n/(2n+1) - 1e-6 when not positive.
  double q_end = 0;
  /// Uniform output grid over [q_start, q_end], endpoints included.
  int samples = 101;
};

struct NullclineTrace {
  long n = 0;
  std::vector<NullclineSample> samples;
  double q_start = 0;
  double q_end = 0;
  /// Analytic right endpoint (n/(2n+1), (n+1)/(2n+1)).
  double endpoint_q = 0;
  double endpoint_p = 0;
  long steps_accepted = 0;
  long steps_rejected = 0;
  /// Invariant failures seen at accepted steps (should stay empty).
  std::vector<std::string> violations;

  /// Cubic Hermite interpolation from the samples. Throws InvalidInput
  /// outside [q_start, q_end].
  double p_at(double q) const;
};

/// Integrates p' = derivative_formula from q_start with p = K_n(q_start),
/// using Dormand-Prince 5(4) on w = p - K_n(q), which keeps the small
/// difference from the starting tangent line free of cancellation. Throws
/// StepFailure if the step size underflows.
NullclineTrace trace(long n, const TraceOptions& options = {});

struct InflectionSample {
  double q = 0;
  double p_minus = 0;
};

/// Real root of the inflection cubic in p on (q, 1-q), by bisection.
double inflection_root(long n, double q);
std::vector<InflectionSample> inflection_curve(long n, const std::vector<double>& qs);

enum class IntersectionIndexing {
  /// L_{n+j-1} against p_{n+2j-1}: the arcs drawn through the Delta regions.
  Arc,
  /// L_{n+j+1} against p_{n+2j-1}, as literally defined.
  Definition,
};

struct Intersection {
  double q = 0;
  /// Closed form obtained by replacing p by the inflection lower bound.
  double q_minus = 0;
  long line_index = 0;
  long curve_index = 0;
};

/// q where p_{n+2j-1} meets the chosen L-line. Throws NoIntersection when
/// the traced difference has no sign change.
Intersection q_intersection(long n, long j,
                            IntersectionIndexing indexing = IntersectionIndexing::Arc,
                            double tolerance = 1e-12);

/// (j + n - 1 - sqrt(j(j^2 + j(2n-1) + (n-1)^2)/(j+1))) / (2j + 2n - 1).
double q_minus_closed(long n, long j);

/// N(q,p) - floor(1/(2(p-q)) + 1/2). Requires p + q < 1.
BigInt delta(const GameParams& params);

}  // namespace coinduel
