#include "goldman/bracket.hpp"

#include <stdexcept>

namespace goldman {

CyclicWord splice(const CyclicWord& x, std::size_t i, const CyclicWord& y, std::size_t j) {
  if (i >= x.size() || j >= y.size()) throw std::out_of_range("splice: junction index out of range");
  return cyclic_canonical(concat(x.rotation(i), y.rotation(j)));
}

Chain bracket(const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y) {
  Chain out;
  if (x.empty() || y.empty()) return out;
  const auto [sys_x, sys_y] = build_strand_pair(s, x, y);
  for (const Crossing& c : crossings(sys_x, sys_y))
    out.add_term(splice(x, static_cast<std::size_t>(c.x_junction), y,
                        static_cast<std::size_t>(c.y_junction)),
                 c.sign);
  return out;
}

Chain bracket_chain(const RibbonSurface& s, const Chain& u, const Chain& v) {
  Chain out;
  for (const auto& [xw, cx] : u.terms())
    for (const auto& [yw, cy] : v.terms()) {
      if (xw.empty() || yw.empty()) continue;
      out += chain_scale(bracket(s, xw, yw), cx * cy);
    }
  return out;
}

}  // namespace goldman
