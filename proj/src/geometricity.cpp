#include "goldman/geometricity.hpp"

#include <cstdlib>
#include <stdexcept>

#include "goldman/enumerate.hpp"

namespace goldman {

std::vector<CyclicWord> peripheral_structure(const RibbonSurface& s) {
  if (s.euler_characteristic() >= 0)
    throw std::invalid_argument(
        "peripheral structure needs negative Euler characteristic; "
        "disc and annulus homotopy equivalences are always geometric");
  return s.boundary_words();
}

std::string DecisionReport::reason_str() const {
  switch (reason) {
    case Reason::ok: return "ok";
    case Reason::not_isomorphism: return "not-isomorphism";
    case Reason::boundary_class_not_peripheral:
      return "boundary-class-not-peripheral(" + std::to_string(failed_component) + ")";
    case Reason::boundary_map_not_bijective: return "boundary-map-not-bijective";
  }
  return "?";
}

std::string DecisionReport::str() const {
  std::string out;
  out += std::string("geometric: ") + (geometric ? "yes" : "no") + "\n";
  out += "orientation: ";
  out += orientation_sign > 0 ? "+1" : orientation_sign < 0 ? "-1" : "undetermined";
  out += "\n";
  out += "reason: " + reason_str() + "\n";
  for (const BoundaryMatch& m : boundary_matching)
    out += "C" + std::to_string(m.source) + " -> C'" + std::to_string(m.target) +
           " (exponent " + std::to_string(m.exponent) + ")\n";
  return out;
}

namespace {

// First non-degenerate commutation verdict over short pairs.
int probe_orientation(const Homomorphism& f, const RibbonSurface& s1, const RibbonSurface& s2) {
  constexpr int kMaxTotal = 6;
  constexpr int kBudget = 512;
  int tried = 0;
  for (int total = 2; total <= kMaxTotal; ++total) {
    for (int lx = 1; lx < total; ++lx) {
      for (const CyclicWord& x : classes_of_length(s1.rank(), lx)) {
        for (const CyclicWord& y : classes_of_length(s1.rank(), total - lx)) {
          if (++tried > kBudget) return 0;
          switch (commutes_on(s1, s2, f, x, y)) {
            case CommuteVerdict::commutes: return 1;
            case CommuteVerdict::anticommutes: return -1;
            case CommuteVerdict::degenerate: break;
            case CommuteVerdict::neither: return 0;
          }
        }
      }
    }
  }
  return 0;
}

}  // namespace

DecisionReport is_geometric(const Homomorphism& f, const RibbonSurface& s1,
                            const RibbonSurface& s2) {
  if (s1.euler_characteristic() >= 0 || s2.euler_characteristic() >= 0)
    throw std::invalid_argument(
        "is_geometric: disc and annulus are excluded; every homotopy "
        "equivalence between them is geometric");
  if (f.source_rank() != s1.rank() || f.target_rank() != s2.rank())
    throw std::invalid_argument("is_geometric: map ranks do not match the surfaces");

  DecisionReport rep;
  if (!is_isomorphism(f)) {
    rep.reason = DecisionReport::Reason::not_isomorphism;
    return rep;
  }

  const auto& sources = s1.boundary_words();
  std::vector<int> hits(static_cast<std::size_t>(s2.boundary_count()), 0);
  std::vector<BoundaryMatch> matches;
  for (int i = 0; i < static_cast<int>(sources.size()); ++i) {
    const CyclicWord image = apply_class(f, sources[static_cast<std::size_t>(i)]);
    const PeripheralInfo info = is_peripheral(s2, image);
    if (!info.peripheral || std::abs(info.exponent) != 1) {
      rep.reason = DecisionReport::Reason::boundary_class_not_peripheral;
      rep.failed_component = i;
      return rep;
    }
    matches.push_back(BoundaryMatch{i, info.component, info.exponent});
    ++hits[static_cast<std::size_t>(info.component)];
  }
  if (s1.boundary_count() != s2.boundary_count()) {
    rep.reason = DecisionReport::Reason::boundary_map_not_bijective;
    return rep;
  }
  for (const int h : hits)
    if (h != 1) {
      rep.reason = DecisionReport::Reason::boundary_map_not_bijective;
      return rep;
    }

  rep.geometric = true;
  rep.reason = DecisionReport::Reason::ok;
  rep.boundary_matching = std::move(matches);
  rep.orientation_sign = probe_orientation(f, s1, s2);
  return rep;
}

std::optional<WitnessPair> find_witness(const Homomorphism& f, const RibbonSurface& s1,
                                        const RibbonSurface& s2, int max_total_length,
                                        long long budget, bool strict) {
  long long used = 0;
  for (int total = 2; total <= max_total_length; ++total) {
    for (int lx = 1; lx < total; ++lx) {
      const auto xs = classes_of_length(s1.rank(), lx);
      const auto ys = classes_of_length(s1.rank(), total - lx);
      for (const CyclicWord& x : xs) {
        for (const CyclicWord& y : ys) {
          if (used + 2 > budget) return std::nullopt;
          used += 2;
          const CommuteVerdict v = commutes_on(s1, s2, f, x, y);
          if (v == CommuteVerdict::neither ||
              (strict && v == CommuteVerdict::anticommutes))
            return WitnessPair{x, y};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace goldman
