#pragma once

// Exact-rational brute force of the defining formulas. Slow by design; used as
// ground truth by the tests and by the small-n branch of the indicator.

#include <vector>

#include "coinduel/model.hpp"
#include "coinduel/numerics.hpp"

namespace coinduel {

/// Row n of Pascal's triangle, cached per n.
const std::vector<BigInt>& binomial_row(unsigned n);

struct ExactWinProb {
  unsigned n = 0;
  Rational value;
};

/// Probability that the q-coin shows strictly more heads than the p-coin
/// after n tosses each:
///   sum_r C(n,r) p^r (1-p)^(n-r) sum_{s>r} C(n,s) q^s (1-q)^(n-s).
Rational brute_force_f(const GameParams& params, unsigned n);

/// f(0), ..., f(n_max).
std::vector<Rational> brute_force_f_series(const GameParams& params,
                                           unsigned n_max);

struct BruteForceMax {
  unsigned N = 0;
  Rational f_at_N;
};

/// Smallest n in [1, n_max] maximizing f(n). Linear scan.
BruteForceMax brute_force_argmax(const GameParams& params, unsigned n_max);

/// J_n(q,p) = y phi_n(z) - psi_n(z), exactly. Its sign is the sign of
/// f(n+1) - f(n).
Rational exact_indicator(const GameParams& params, unsigned n);

/// True iff f(n+1) - f(n) = ((1-p)(1-q))^(n+1) J_n(q,p) holds exactly.
bool verify_recurrence_identity(const GameParams& params, unsigned n);

/// Power-series coefficients t^0 .. t^order of the closed-form generating
/// function of f(n), expanded with exact binomial-series arithmetic.
std::vector<Rational> gf_coefficients(const GameParams& params, unsigned order);

}  // namespace coinduel
