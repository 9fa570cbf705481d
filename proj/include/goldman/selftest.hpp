#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace goldman {

struct SelftestOptions {
  int rank_max = 3;
  int len_max = 4;
  int trials = 200;
  std::uint64_t seed = 20250810;
};

struct SuiteResult {
  std::string name;
  long long cases = 0;
  long long failures = 0;
  std::string first_failure;  // empty when clean
};

// Runs the executable invariant suites: skew-symmetry, Jacobi, peripheral
// annihilation, band consistency and conjugation invariance. Exhaustive
// parts run on the one-holed torus and the pair of pants up to len_max;
// sampled parts draw `trials` cases from seeded randomness.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace goldman
