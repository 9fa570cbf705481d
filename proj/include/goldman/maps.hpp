#pragma once

#include <string_view>
#include <vector>

#include "goldman/bracket.hpp"
#include "goldman/chain.hpp"
#include "goldman/surface.hpp"
#include "goldman/words.hpp"

namespace goldman {

// A homomorphism between free groups, given by the images of the source
// generators over the target alphabet.
class Homomorphism {
 public:
  static Homomorphism make(int source_rank, int target_rank, std::vector<Word> images);
  static Homomorphism identity(int rank);

  // Comma-separated assignments, e.g. "a->ab,b->b". Every source generator
  // must appear exactly once on a left side.
  static Homomorphism parse(std::string_view text, int source_rank, int target_rank);

  int source_rank() const { return source_rank_; }
  int target_rank() const { return target_rank_; }
  const std::vector<Word>& images() const { return images_; }

 private:
  Homomorphism(int sr, int tr, std::vector<Word> images)
      : source_rank_(sr), target_rank_(tr), images_(std::move(images)) {}

  int source_rank_;
  int target_rank_;
  std::vector<Word> images_;
};

// Throws std::invalid_argument when u uses letters outside the source rank.
Word apply_word(const Homomorphism& f, const Word& u);
CyclicWord apply_class(const Homomorphism& f, const CyclicWord& x);
Chain apply_chain(const Homomorphism& f, const Chain& u);

// g after f.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

// True iff f is an isomorphism: equal ranks and the images generate the
// whole target group. Surjectivity is decided by Stallings folding of the
// wedge of image loops; at equal finite rank it implies injectivity, free
// groups being Hopfian.
bool is_isomorphism(const Homomorphism& f);

enum class CommuteVerdict { commutes, anticommutes, neither, degenerate };
const char* to_string(CommuteVerdict v);

// Compares [f(x), f(y)] on s2 with the image of [x, y] from s1. `degenerate`
// means both sides vanish, which tells nothing about orientation.
CommuteVerdict commutes_on(const RibbonSurface& s1, const RibbonSurface& s2,
                           const Homomorphism& f, const CyclicWord& x, const CyclicWord& y);

}  // namespace goldman
