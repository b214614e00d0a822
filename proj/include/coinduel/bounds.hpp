#pragma once

// Closed-form bounds and approximations for the optimal game length N(q,p).
// All floors and ceilings are taken exactly.

#include <optional>

#include "coinduel/model.hpp"
#include "coinduel/numerics.hpp"

namespace coinduel {

struct SimpleBounds {
  BigInt lower;
  BigInt upper;
};

/// lower = floor(1/(2(p-q)) + 1/2) off the diagonal and
/// floor(1/(2(p-q)) - 1/2) on it; upper = ceil(max(1-p, q)/(p-q)).
SimpleBounds simple_bounds(const GameParams& params);

/// floor(1/(2(p-q)) - 1/2), valid everywhere.
BigInt weak_lower(const GameParams& params);

/// N on p + q = 1: ceil(q/(1-2q)). Requires 0 < q < 1/2.
BigInt diagonal_n(const Rational& q);
/// True when q = n/(2n+1), where n and n+1 tie on the diagonal.
bool diagonal_tie(const Rational& q);

/// ceil((1-p)/(p - q/2)). Requires p + q < 1.
BigInt linear_lower(const GameParams& params);

struct ImprovedBounds {
  BigInt n_minus;
  BigInt n_plus;
  /// The roots themselves, for display.
  double root_minus = 0;
  double root_plus = 0;
};

/// Ceilings of the positive-radical roots of
///   2n^2 d^3 + 2n(p^2 - 3pq - p + q^2 + 2q) d - (1-p) q (1 - 3p + 3q) = 0
/// and of DF = n/(2(n+1)) with DF the nullcline slope formula, d = p - q.
/// Requires p + q < 1. Throws NoRealRoot for a negative discriminant.
ImprovedBounds improved_bounds(const GameParams& params);

/// ceil(1/(2(p-q)) - 3/2 + 1/(4p(1-p))). An approximation, not a bound.
BigInt h_approx(const GameParams& params);

/// floor(1/(2(p-q)) + 1/2) + ceil((1-2q)^2/(4q(1-q))). Only holds when q is
/// past an intersection point that is not known in closed form, so it is
/// reported as conditional.
BigInt delta_cap(const GameParams& params);

/// (1 - sqrt(j/(j+1)))/2.
Real q_infinity(unsigned long j, Bits bits = 128);

/// Smallest integer k >= the larger root of a k^2 + b k + c with a > 0.
/// Throws NoRealRoot when b^2 < 4ac.
BigInt ceil_larger_root(const Rational& a, const Rational& b, const Rational& c);

struct BoundSet {
  /// floor(1/(2(p-q)) - 1/2).
  BigInt lower_simple;
  /// floor(1/(2(p-q)) + 1/2), off the diagonal.
  std::optional<BigInt> lower_simple_strict;
  std::optional<BigInt> lower_linear;
  /// N^-, clamped at zero.
  std::optional<BigInt> lower_improved;
  BigInt upper_simple;
  /// N^+.
  std::optional<BigInt> upper_improved;
  std::optional<BigInt> h_approx;
  std::optional<BigInt> delta_cap;
  bool delta_cap_conditional = true;
  /// Exact N when p + q = 1.
  std::optional<BigInt> diagonal;

  BigInt lower() const;
  BigInt upper() const;
};

/// Everything above for one point; points with p + q > 1 are evaluated at
/// their reflection, which has the same N.
BoundSet compute_bounds(const GameParams& params);

}  // namespace coinduel
