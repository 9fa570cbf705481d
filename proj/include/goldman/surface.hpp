#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "goldman/words.hpp"

namespace goldman {

// A compact, connected, oriented surface with non-empty boundary, encoded as
// a one-vertex ribbon graph: `rank` edges (the free generators of pi_1) and a
// cyclic order of the 2*rank darts around the vertex. The order is read
// counterclockwise; by definition the surface orientation is the one making
// that reading counterclockwise.
//
// Boundary components are the face orbits of d -> next(inverse(d)), where
// next is the successor in the counterclockwise dart order; the word of a
// component lists the darts the trace traverses. With this convention the
// one-holed torus (a b A B) has the single boundary class aBAb, and the pair
// of pants (a A b B) has ab, A and B.
class RibbonSurface {
 public:
  // Validates and traces boundary eagerly. Throws std::invalid_argument on a
  // duplicate or missing dart, rank < 1, rank > 26, or (defensively) a dart
  // order yielding a non-integral or negative genus.
  static RibbonSurface validate(int rank, std::vector<Letter> dart_order);

  // Line-oriented text format ('#' starts a comment):
  //   rank 2
  //   order a b A B
  static RibbonSurface parse(std::istream& in);
  static RibbonSurface load(const std::string& path);

  int rank() const { return rank_; }
  int dart_count() const { return 2 * rank_; }
  const std::vector<Letter>& dart_order() const { return dart_order_; }
  int position(Letter dart) const { return pos_[dart.code()]; }

  const std::vector<CyclicWord>& boundary_words() const { return boundary_; }
  int boundary_count() const { return static_cast<int>(boundary_.size()); }
  int euler_characteristic() const { return 1 - rank_; }
  int genus() const { return genus_; }

 private:
  RibbonSurface() = default;

  int rank_ = 0;
  int genus_ = 0;
  std::vector<Letter> dart_order_;
  std::array<int, 2 * kMaxRank> pos_{};
  std::vector<CyclicWord> boundary_;
};

struct TopologySummary {
  int euler_characteristic;
  int genus;
  int boundary_count;
};

TopologySummary topology_summary(const RibbonSurface& s);

struct PeripheralInfo {
  bool peripheral = false;
  int component = -1;  // meaningful iff peripheral
  int exponent = 0;    // nonzero iff peripheral; class = boundary^exponent
};

// Decides whether x is conjugate to a power of a boundary word. Throws
// std::invalid_argument on the trivial class.
PeripheralInfo is_peripheral(const RibbonSurface& s, const CyclicWord& x);

}  // namespace goldman
