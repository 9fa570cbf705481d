#pragma once

#include <cstdint>
#include <vector>

#include "goldman/words.hpp"

namespace goldman {

// All canonical classes of the exact length, in spelling order.
std::vector<CyclicWord> classes_of_length(int rank, int length);

// All non-trivial canonical classes of length <= max_length, ordered by
// (length, spelling).
std::vector<CyclicWord> classes_up_to(int rank, int max_length);

// Deterministic generator for the sampled test suites. Uses its own integer
// reduction so a fixed seed gives the same stream everywhere.
class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next();
  int uniform(int lo, int hi);  // inclusive bounds

  // Freely reduced word of the exact length.
  Word random_word(int rank, int length);
  // Non-trivial canonical class, length in [1, max_length] before reduction.
  CyclicWord random_class(int rank, int max_length);
  // Any cyclic order of the 2*rank darts.
  std::vector<Letter> random_dart_order(int rank);

 private:
  std::uint64_t state_;
};

}  // namespace goldman
