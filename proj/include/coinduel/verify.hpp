#pragma once

// Cross-checks of the fast paths against the exact oracle and of the
// analytic identities. Shared by `coinduel verify` and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace coinduel {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// One line of figures (counts, measured fractions, first mismatch).
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// N(0.18, 0.2) = 26, f(26) near 0.36 and f(1) = 18/125 exactly, in < 1 s.
CheckResult check_small_example();

/// N(10^-k, 2*10^-k) against the known digits for each listed k
/// (5, 10, ..., 30 and 100 are available).
CheckResult check_table(const std::vector<int>& ks);

/// optimal_n against brute_force_argmax at random rational points whose
/// upper bound is at most max_upper, on both sides of the diagonal.
CheckResult check_oracle_equivalence(int points, std::uint64_t seed, long max_upper = 60);

/// Exact identities: the f(n+1) - f(n) identity, psi from phi, phi from P_n,
/// generating-function coefficients, and Y_n by definition vs recurrence.
CheckResult check_identities(int points, std::uint64_t seed);

/// Every lower bound <= N <= every upper bound, and N^- <= N <= N^+.
CheckResult check_bounds_sandwich(int points, std::uint64_t seed);

/// diagonal_n against brute force, and N(q,p) = N(1-p,1-q).
CheckResult check_diagonal_symmetry(int diagonal_points, int pairs, std::uint64_t seed);

/// Traced p_1, p_2 against closed forms, trace invariants for n <= 10 and
/// nesting p_1 > ... > p_10.
CheckResult check_nullclines(int samples = 100);

/// Monte Carlo fractions against pi^2/4 - 2, 0.60 and 0.87 (each +- 0.02).
CheckResult check_areas(long samples, std::uint64_t seed, int threads = 1);

/// Brute-force f has one maximum plateau of width at most 2.
CheckResult check_unimodality(int points, std::uint64_t seed);

/// Exact, recurrence and quadrature signs agree for every n listed.
CheckResult check_strategies(int points, std::uint64_t seed,
                             const std::vector<unsigned long>& ns = {1, 10, 100, 500});

enum class VerifyLevel { Quick, Full };

/// Quick runs reduced counts (well under a minute); Full runs the complete
/// sizes, including a million-sample area estimate.
VerifyReport run_verify(VerifyLevel level, std::uint64_t seed = 20240601, int threads = 1);

}  // namespace coinduel
