#include "goldman/enumerate.hpp"

#include <algorithm>

namespace goldman {

namespace {

void extend(int rank, int length, std::vector<Letter>& prefix, std::vector<CyclicWord>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    if (prefix.front() == prefix.back().inverse()) return;  // not cyclically reduced
    std::vector<Letter> copy = prefix;
    const std::size_t r = least_rotation_index(copy);
    std::rotate(copy.begin(), copy.begin() + static_cast<std::ptrdiff_t>(r), copy.end());
    if (copy != prefix) return;  // keep canonical spellings only
    out.push_back(cyclic_canonical(Word::from_letters(prefix)));
    return;
  }
  for (int code = 0; code < 2 * rank; ++code) {
    const Letter l = Letter::from_code(static_cast<std::uint8_t>(code));
    if (!prefix.empty() && l == prefix.back().inverse()) continue;
    prefix.push_back(l);
    extend(rank, length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CyclicWord> classes_of_length(int rank, int length) {
  std::vector<CyclicWord> out;
  if (length <= 0) return out;
  std::vector<Letter> prefix;
  prefix.reserve(static_cast<std::size_t>(length));
  extend(rank, length, prefix, out);
  return out;
}

std::vector<CyclicWord> classes_up_to(int rank, int max_length) {
  std::vector<CyclicWord> out;
  for (int len = 1; len <= max_length; ++len) {
    auto batch = classes_of_length(rank, len);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::uint64_t WordSampler::next() {
  // splitmix64 step
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int WordSampler::uniform(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Word WordSampler::random_word(int rank, int length) {
  std::vector<Letter> ls;
  ls.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    Letter l;
    do {
      l = Letter::from_code(static_cast<std::uint8_t>(uniform(0, 2 * rank - 1)));
    } while (!ls.empty() && l == ls.back().inverse());
    ls.push_back(l);
  }
  return Word::from_letters(std::move(ls));
}

CyclicWord WordSampler::random_class(int rank, int max_length) {
  // A reduced non-empty word never cyclically reduces to the empty word.
  const Word w = random_word(rank, uniform(1, max_length));
  return cyclic_canonical(w);
}

std::vector<Letter> WordSampler::random_dart_order(int rank) {
  std::vector<Letter> order;
  order.reserve(static_cast<std::size_t>(2 * rank));
  for (int code = 0; code < 2 * rank; ++code)
    order.push_back(Letter::from_code(static_cast<std::uint8_t>(code)));
  for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(uniform(0, i))]);
  return order;
}

}  // namespace goldman
