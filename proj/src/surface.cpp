#include "goldman/surface.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace goldman {

RibbonSurface RibbonSurface::validate(int rank, std::vector<Letter> dart_order) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (rank > kMaxRank) throw std::invalid_argument("rank exceeds 26");
  const std::size_t n2 = static_cast<std::size_t>(2 * rank);
  if (dart_order.size() != n2)
    throw std::invalid_argument("dart order must list exactly 2*rank darts");

  RibbonSurface s;
  s.rank_ = rank;
  s.dart_order_ = std::move(dart_order);
  s.pos_.fill(-1);
  for (std::size_t p = 0; p < n2; ++p) {
    const Letter d = s.dart_order_[p];
    if (d.generator() >= rank)
      throw std::invalid_argument("dart '" + std::string(1, d.to_char()) + "' beyond rank");
    if (s.pos_[d.code()] != -1)
      throw std::invalid_argument("duplicate dart '" + std::string(1, d.to_char()) + "'");
    s.pos_[d.code()] = static_cast<int>(p);
  }
  // Every code < 2*rank placed once implies none missing.

  // Trace faces: successor of d is next(inverse(d)). A boundary walk with
  // the surface on the left runs along one band side per step and reads the
  // dart it exits through.
  std::vector<bool> visited(n2, false);
  for (std::size_t p = 0; p < n2; ++p) {
    if (visited[static_cast<std::size_t>(s.dart_order_[p].code())]) continue;
    std::vector<Letter> face;
    Letter d = s.dart_order_[p];
    do {
      visited[d.code()] = true;
      face.push_back(d);
      const int pi = s.pos_[d.inverse().code()];
      d = s.dart_order_[(static_cast<std::size_t>(pi) + 1) % n2];
    } while (d != s.dart_order_[p]);
    const CyclicWord w = cyclic_canonical(Word::from_letters(face));
    if (w.size() != face.size())
      throw std::logic_error("face word unexpectedly not cyclically reduced");
    s.boundary_.push_back(w);
  }

  const int chi = 1 - rank;
  const int b = static_cast<int>(s.boundary_.size());
  const int twice_genus = 2 - chi - b;
  if (twice_genus % 2 != 0 || twice_genus < 0)
    throw std::invalid_argument("dart order yields non-integral or negative genus");
  s.genus_ = twice_genus / 2;

  if (chi < 0) {
    // Primitive boundary classes of distinct components are distinct and
    // never mutually inverse.
    std::vector<CyclicWord> roots, inv_roots;
    for (const auto& w : s.boundary_) {
      const auto pr = primitive_root(w);
      roots.push_back(pr.root);
      inv_roots.push_back(inverse_class(pr.root));
    }
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (roots[i] == roots[j] || roots[i] == inv_roots[j])
          throw std::logic_error("boundary classes of distinct components collide");
  }
  return s;
}

RibbonSurface RibbonSurface::parse(std::istream& in) {
  int rank = -1;
  std::vector<Letter> order;
  bool have_order = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "rank") {
      if (!(ls >> rank)) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'rank <n>'");
    } else if (key == "order") {
      if (rank < 0) throw std::invalid_argument("'order' before 'rank'");
      std::string tok;
      while (ls >> tok) {
        if (tok.size() != 1)
          throw std::invalid_argument("line " + std::to_string(lineno) + ": darts are single characters");
        order.push_back(Letter::from_char(tok[0], rank));
      }
      have_order = true;
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown directive '" + key + "'");
    }
  }
  if (rank < 0 || !have_order)
    throw std::invalid_argument("surface file needs 'rank' and 'order' lines");
  return validate(rank, std::move(order));
}

RibbonSurface RibbonSurface::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open surface file: " + path);
  return parse(in);
}

TopologySummary topology_summary(const RibbonSurface& s) {
  return TopologySummary{s.euler_characteristic(), s.genus(), s.boundary_count()};
}

PeripheralInfo is_peripheral(const RibbonSurface& s, const CyclicWord& x) {
  if (x.empty()) throw std::invalid_argument("is_peripheral: trivial class");
  const auto xr = primitive_root(x);
  for (int i = 0; i < s.boundary_count(); ++i) {
    const auto br = primitive_root(s.boundary_words()[static_cast<std::size_t>(i)]);
    if (xr.root == br.root && xr.exponent % br.exponent == 0)
      return PeripheralInfo{true, i, xr.exponent / br.exponent};
    if (xr.root == inverse_class(br.root) && xr.exponent % br.exponent == 0)
      return PeripheralInfo{true, i, -(xr.exponent / br.exponent)};
  }
  return PeripheralInfo{};
}

}  // namespace goldman
