#include "goldman/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldman {

Letter Letter::make(int generator_index, bool inverse) {
  if (generator_index < 0 || generator_index >= kMaxRank)
    throw std::invalid_argument("generator index out of range");
  return from_code(static_cast<std::uint8_t>(2 * generator_index + (inverse ? 1 : 0)));
}

Letter Letter::from_char(char c, int rank) {
  if (c >= 'a' && c <= 'z') {
    const int idx = c - 'a';
    if (idx >= rank)
      throw std::invalid_argument(std::string("letter '") + c + "' beyond rank " + std::to_string(rank));
    return make(idx, false);
  }
  if (c >= 'A' && c <= 'Z') {
    const int idx = c - 'A';
    if (idx >= rank)
      throw std::invalid_argument(std::string("letter '") + c + "' beyond rank " + std::to_string(rank));
    return make(idx, true);
  }
  throw std::invalid_argument(std::string("unknown character '") + c + "' in word");
}

char Letter::to_char() const {
  const int idx = generator();
  return static_cast<char>((is_inverse() ? 'A' : 'a') + idx);
}

namespace {

std::vector<Letter> reduce(std::vector<Letter> in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (const Letter l : in) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string render(const std::vector<Letter>& ls) {
  std::string s;
  s.reserve(ls.size());
  for (const Letter l : ls) s.push_back(l.to_char());
  return s;
}

}  // namespace

Word Word::from_letters(std::vector<Letter> letters) {
  return Word(reduce(std::move(letters)), raw_tag{});
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (const char c : text) ls.push_back(Letter::from_char(c, rank));
  return from_letters(std::move(ls));
}

std::string Word::str() const { return render(letters_); }

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> ls = u.letters_;
  ls.insert(ls.end(), v.letters_.begin(), v.letters_.end());
  // Both inputs are reduced, so a single stack pass reduces the product.
  return Word(reduce(std::move(ls)), Word::raw_tag{});
}

Word invert(const Word& u) {
  std::vector<Letter> ls;
  ls.reserve(u.size());
  for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) ls.push_back(it->inverse());
  return Word(std::move(ls), Word::raw_tag{});  // stays reduced
}

std::size_t least_rotation_index(const std::vector<Letter>& v) {
  const std::size_t n = v.size();
  if (n <= 1) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = v[(i + k) % n];
    const Letter b = v[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (b < a) {
      i += k + 1;
      if (i == j) ++i;
    } else {
      j += k + 1;
      if (j == i) ++j;
    }
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord cyclic_canonical(const Word& u) {
  std::vector<Letter> v = u.letters();
  std::size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == v[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(v.begin() + static_cast<std::ptrdiff_t>(lo),
                           v.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t r = least_rotation_index(core);
  std::rotate(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(r), core.end());
  return CyclicWord(std::move(core));
}

std::string CyclicWord::str() const { return render(letters_); }

Word CyclicWord::rotation(std::size_t start) const {
  if (letters_.empty()) return Word();
  if (start >= letters_.size()) throw std::out_of_range("rotation start out of range");
  std::vector<Letter> ls(letters_.begin() + static_cast<std::ptrdiff_t>(start), letters_.end());
  ls.insert(ls.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(start));
  return Word::from_letters(std::move(ls));  // rotations of a cyclically reduced word are reduced
}

std::strong_ordering CyclicWord::operator<=>(const CyclicWord& other) const {
  if (letters_.size() != other.letters_.size())
    return letters_.size() <=> other.letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != other.letters_[i]) return letters_[i] <=> other.letters_[i];
  }
  return std::strong_ordering::equal;
}

bool are_conjugate(const Word& u, const Word& v) {
  return cyclic_canonical(u) == cyclic_canonical(v);
}

CyclicWord inverse_class(const CyclicWord& x) { return cyclic_canonical(invert(x.representative())); }

PrimitiveRoot primitive_root(const CyclicWord& x) {
  if (x.empty()) throw std::invalid_argument("primitive_root: trivial class has no primitive root");
  const auto& v = x.letters();
  const std::size_t n = v.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i + p < n && periodic; ++i)
      if (v[i] != v[i + p]) periodic = false;
    if (!periodic) continue;
    std::vector<Letter> head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(p));
    return PrimitiveRoot{cyclic_canonical(Word::from_letters(std::move(head))),
                         static_cast<int>(n / p)};
  }
  throw std::logic_error("primitive_root: unreachable");
}

CyclicWord power_class(const CyclicWord& x, int n) {
  if (n == 0 || x.empty()) return CyclicWord();
  const CyclicWord base = n > 0 ? x : inverse_class(x);
  const int k = n > 0 ? n : -n;
  std::vector<Letter> ls;
  ls.reserve(base.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    ls.insert(ls.end(), base.letters().begin(), base.letters().end());
  // Powers of a cyclically reduced word stay cyclically reduced.
  return cyclic_canonical(Word::from_letters(std::move(ls)));
}

}  // namespace goldman
