#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "goldman/words.hpp"

namespace goldman {

// An integer formal sum of free homotopy classes. Zero coefficients are
// never stored; equality is term-by-term.
class Chain {
 public:
  Chain() = default;

  static Chain unit(const CyclicWord& w, std::int64_t coeff = 1) {
    Chain c;
    c.add_term(w, coeff);
    return c;
  }

  void add_term(const CyclicWord& w, std::int64_t coeff) {
    if (coeff == 0) return;
    const auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, coeff);
    } else if ((it->second += coeff) == 0) {
      terms_.erase(it);
    }
  }

  const std::map<CyclicWord, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Chain& operator+=(const Chain& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }

  // Terms sorted by canonical word: "+1*(ab) -2*(aab)"; zero renders "0".
  std::string str() const;

  bool operator==(const Chain&) const = default;

 private:
  std::map<CyclicWord, std::int64_t> terms_;
};

Chain chain_add(const Chain& u, const Chain& v);
Chain chain_negate(const Chain& u);
Chain chain_scale(const Chain& u, std::int64_t k);

}  // namespace goldman
