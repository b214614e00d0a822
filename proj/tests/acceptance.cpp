// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.
//
//   acceptance            criteria 1-10 at full size
//   acceptance --giant    only the 100-digit table entry

#include <cstring>
#include <iomanip>
#include <iostream>
#include <string>

#include "coinduel/verify.hpp"

using namespace coinduel;

namespace {

int report(int id, const CheckResult& r) {
  std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << " "
            << r.name << ": " << r.detail << " [" << std::fixed << std::setprecision(2)
            << r.seconds << " s]" << std::endl;
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = 20240601;
  if (argc > 1 && std::strcmp(argv[1], "--giant") == 0) {
    return report(2, check_table({100}));
  }

  int failures = 0;
  CheckResult small = check_small_example();
  small.passed = small.passed && small.seconds < 1.0;
  failures += report(1, small);
  failures += report(2, check_table({5, 10, 15, 20, 25, 30}));
  failures += report(3, check_oracle_equivalence(300, seed + 1, 60));
  failures += report(4, check_identities(20, seed + 2));
  failures += report(5, check_bounds_sandwich(500, seed + 3));
  failures += report(6, check_diagonal_symmetry(50, 100, seed + 4));
  failures += report(7, check_nullclines(100));
  failures += report(8, check_areas(1000000, seed + 5, 1));
  failures += report(9, check_unimodality(200, seed + 6));
  failures += report(10, check_strategies(50, seed + 7, {1, 10, 100, 500}));
  return failures;
}
