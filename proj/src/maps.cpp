#include "goldman/maps.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace goldman {

Homomorphism Homomorphism::make(int source_rank, int target_rank, std::vector<Word> images) {
  if (source_rank < 0 || source_rank > kMaxRank || target_rank < 0 || target_rank > kMaxRank)
    throw std::invalid_argument("rank out of range");
  if (images.size() != static_cast<std::size_t>(source_rank))
    throw std::invalid_argument("need one image per source generator");
  for (const Word& w : images)
    for (const Letter l : w.letters())
      if (l.generator() >= target_rank)
        throw std::invalid_argument("image uses a letter beyond the target rank");
  return Homomorphism(source_rank, target_rank, std::move(images));
}

Homomorphism Homomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i)
    images.push_back(Word::from_letters({Letter::make(i, false)}));
  return make(rank, rank, std::move(images));
}

Homomorphism Homomorphism::parse(std::string_view text, int source_rank, int target_rank) {
  std::vector<Word> images(static_cast<std::size_t>(source_rank));
  std::vector<bool> seen(static_cast<std::size_t>(source_rank), false);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t arrow = item.find("->");
    if (arrow == std::string_view::npos)
      throw std::invalid_argument("map entry needs the form <generator>->(word)");
    const std::string_view lhs = item.substr(0, arrow);
    if (lhs.size() != 1 || lhs[0] < 'a' || lhs[0] > 'z')
      throw std::invalid_argument("left side of a map entry must be a single generator");
    const int idx = lhs[0] - 'a';
    if (idx >= source_rank)
      throw std::invalid_argument("generator on left side beyond source rank");
    if (seen[static_cast<std::size_t>(idx)])
      throw std::invalid_argument(std::string("generator '") + lhs[0] + "' assigned twice");
    seen[static_cast<std::size_t>(idx)] = true;
    images[static_cast<std::size_t>(idx)] = Word::parse(item.substr(arrow + 2), target_rank);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  for (int i = 0; i < source_rank; ++i)
    if (!seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument(std::string("no image given for generator '") +
                                  static_cast<char>('a' + i) + "'");
  return make(source_rank, target_rank, std::move(images));
}

Word apply_word(const Homomorphism& f, const Word& u) {
  std::vector<Letter> out;
  for (const Letter l : u.letters()) {
    if (l.generator() >= f.source_rank())
      throw std::invalid_argument("word uses a letter beyond the source rank");
    const Word& im = f.images()[static_cast<std::size_t>(l.generator())];
    if (!l.is_inverse()) {
      out.insert(out.end(), im.letters().begin(), im.letters().end());
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return Word::from_letters(std::move(out));
}

CyclicWord apply_class(const Homomorphism& f, const CyclicWord& x) {
  return cyclic_canonical(apply_word(f, x.representative()));
}

Chain apply_chain(const Homomorphism& f, const Chain& u) {
  Chain out;
  for (const auto& [w, c] : u.terms()) out.add_term(apply_class(f, w), c);
  return out;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.target_rank() != g.source_rank())
    throw std::invalid_argument("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(f.images().size());
  for (const Word& w : f.images()) images.push_back(apply_word(g, w));
  return Homomorphism::make(f.source_rank(), g.target_rank(), std::move(images));
}

namespace {

// Stallings folding over the wedge of image loops. Vertices live in a
// union-find; each representative keeps one outgoing and one incoming slot
// per generator label, and clashes queue further merges.
class FoldedGraph {
 public:
  explicit FoldedGraph(std::size_t vertex_count)
      : parent_(vertex_count), slots_(2, std::vector<std::unordered_map<int, int>>(vertex_count)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  // u --g--> v
  void add_edge(int u, int g, int v) {
    link(u, 0, g, v);
    link(v, 1, g, u);
    settle();
  }

  bool has_loop(int v, int g) {
    v = find(v);
    auto& out = slots_[0][static_cast<std::size_t>(v)];
    const auto it = out.find(g);
    return it != out.end() && find(it->second) == v;
  }

 private:
  void link(int u, int dir, int g, int w) {
    u = find(u);
    w = find(w);
    auto& slot = slots_[static_cast<std::size_t>(dir)][static_cast<std::size_t>(u)];
    const auto [it, inserted] = slot.try_emplace(g, w);
    if (!inserted && find(it->second) != w) pending_.emplace_back(find(it->second), w);
  }

  void settle() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      const std::size_t wa = slots_[0][static_cast<std::size_t>(a)].size() +
                             slots_[1][static_cast<std::size_t>(a)].size();
      const std::size_t wb = slots_[0][static_cast<std::size_t>(b)].size() +
                             slots_[1][static_cast<std::size_t>(b)].size();
      if (wa < wb) std::swap(a, b);
      parent_[static_cast<std::size_t>(b)] = a;
      for (int dir = 0; dir < 2; ++dir) {
        auto moved = std::move(slots_[static_cast<std::size_t>(dir)][static_cast<std::size_t>(b)]);
        slots_[static_cast<std::size_t>(dir)][static_cast<std::size_t>(b)].clear();
        for (const auto& [g, w] : moved) link(a, dir, g, w);
      }
    }
  }

  std::vector<int> parent_;
  std::vector<std::vector<std::unordered_map<int, int>>> slots_;  // [dir][vertex]
  std::deque<std::pair<int, int>> pending_;
};

}  // namespace

bool is_isomorphism(const Homomorphism& f) {
  if (f.source_rank() != f.target_rank()) return false;
  if (f.target_rank() == 0) return true;

  std::size_t vertices = 1;
  for (const Word& w : f.images()) vertices += w.size() == 0 ? 0 : w.size() - 1;
  FoldedGraph graph(vertices);

  int next = 1;
  for (const Word& w : f.images()) {
    if (w.empty()) continue;
    int at = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Letter l = w.letters()[i];
      const int to = (i + 1 == w.size()) ? 0 : next++;
      if (!l.is_inverse())
        graph.add_edge(at, l.generator(), to);
      else
        graph.add_edge(to, l.generator(), at);
      at = to;
    }
  }

  for (int g = 0; g < f.target_rank(); ++g)
    if (!graph.has_loop(0, g)) return false;
  return true;
}

const char* to_string(CommuteVerdict v) {
  switch (v) {
    case CommuteVerdict::commutes: return "commutes";
    case CommuteVerdict::anticommutes: return "anticommutes";
    case CommuteVerdict::neither: return "neither";
    case CommuteVerdict::degenerate: return "degenerate";
  }
  return "?";
}

CommuteVerdict commutes_on(const RibbonSurface& s1, const RibbonSurface& s2,
                           const Homomorphism& f, const CyclicWord& x, const CyclicWord& y) {
  if (f.source_rank() != s1.rank() || f.target_rank() != s2.rank())
    throw std::invalid_argument("commutes_on: map ranks do not match the surfaces");
  const Chain lhs = bracket(s2, apply_class(f, x), apply_class(f, y));
  const Chain rhs = apply_chain(f, bracket(s1, x, y));
  if (lhs == rhs) return lhs.is_zero() ? CommuteVerdict::degenerate : CommuteVerdict::commutes;
  if (lhs == chain_negate(rhs)) return CommuteVerdict::anticommutes;
  return CommuteVerdict::neither;
}

}  // namespace goldman
