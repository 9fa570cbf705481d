#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace goldman {

// Generators are written a..z, inverses A..Z.
inline constexpr int kMaxRank = 26;

// A signed generator of a free group. Encoded as 2*index + (inverse ? 1 : 0),
// so the natural order on codes is: index ascending, positive sign before
// negative. That order is the one used for canonical rotations.
class Letter {
 public:
  constexpr Letter() = default;

  static Letter make(int generator_index, bool inverse);
  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  // Parses one character; throws std::invalid_argument on anything that is
  // not a letter within the given rank.
  static Letter from_char(char c, int rank);

  int generator() const { return code_ >> 1; }
  bool is_inverse() const { return (code_ & 1) != 0; }
  Letter inverse() const { return from_code(static_cast<std::uint8_t>(code_ ^ 1)); }
  std::uint8_t code() const { return code_; }
  char to_char() const;

  auto operator<=>(const Letter&) const = default;

 private:
  std::uint8_t code_ = 0;
};

}  // namespace goldman
