#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "goldman/letters.hpp"

namespace goldman {

// A freely reduced word in a free group: no adjacent pair l, l^-1.
// All factory paths reduce, so the invariant always holds.
class Word {
 public:
  Word() = default;

  // Reduces the given letter sequence.
  static Word from_letters(std::vector<Letter> letters);

  // Lowercase = generator, uppercase = inverse. Throws std::invalid_argument
  // on unknown characters or letters beyond the rank.
  static Word parse(std::string_view text, int rank);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const;

  bool operator==(const Word&) const = default;

 private:
  friend Word concat(const Word&, const Word&);
  friend Word invert(const Word&);
  struct raw_tag {};
  Word(std::vector<Letter> reduced, raw_tag) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& u);

// A conjugacy class in the free group, i.e. a free homotopy class of loops.
// Invariants: cyclically reduced, and stored in the lexicographically least
// rotation. The empty word is the trivial class.
class CyclicWord {
 public:
  CyclicWord() = default;

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string str() const;

  // Cyclic indexing; any integer is reduced mod size. Undefined on the
  // trivial class.
  Letter at(std::ptrdiff_t i) const {
    const auto n = static_cast<std::ptrdiff_t>(letters_.size());
    std::ptrdiff_t r = i % n;
    if (r < 0) r += n;
    return letters_[static_cast<std::size_t>(r)];
  }

  // A representative word reading the class from cyclic position `start`.
  Word rotation(std::size_t start) const;
  Word representative() const { return rotation(0); }

  bool operator==(const CyclicWord&) const = default;
  // Orders by length, then letterwise; this is the order chains print in.
  std::strong_ordering operator<=>(const CyclicWord& other) const;

 private:
  friend CyclicWord cyclic_canonical(const Word&);
  explicit CyclicWord(std::vector<Letter> canonical) : letters_(std::move(canonical)) {}

  std::vector<Letter> letters_;
};

// Canonical form of the conjugacy class of u: cyclically reduce, then take
// the least rotation.
CyclicWord cyclic_canonical(const Word& u);

inline CyclicWord parse_class(std::string_view text, int rank) {
  return cyclic_canonical(Word::parse(text, rank));
}

bool are_conjugate(const Word& u, const Word& v);

CyclicWord inverse_class(const CyclicWord& x);

struct PrimitiveRoot {
  CyclicWord root;
  int exponent;  // >= 1, maximal with x = root^exponent
};

// Throws std::invalid_argument on the trivial class.
PrimitiveRoot primitive_root(const CyclicWord& x);

// Class of x^n; n = 0 and the trivial class give the trivial class.
CyclicWord power_class(const CyclicWord& x, int n);

// Index of the lexicographically least rotation (Booth-style duel scan).
std::size_t least_rotation_index(const std::vector<Letter>& letters);

}  // namespace goldman
