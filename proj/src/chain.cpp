#include "goldman/chain.hpp"

namespace goldman {

std::string Chain::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out.push_back(' ');
    out += (c > 0 ? "+" : "-") + std::to_string(c > 0 ? c : -c) + "*(" + w.str() + ")";
  }
  return out;
}

Chain chain_add(const Chain& u, const Chain& v) {
  Chain out = u;
  out += v;
  return out;
}

Chain chain_negate(const Chain& u) { return chain_scale(u, -1); }

Chain chain_scale(const Chain& u, std::int64_t k) {
  Chain out;
  if (k == 0) return out;
  for (const auto& [w, c] : u.terms()) out.add_term(w, c * k);
  return out;
}

}  // namespace goldman
