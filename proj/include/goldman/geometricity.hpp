#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goldman/maps.hpp"
#include "goldman/surface.hpp"

namespace goldman {

// The primitive boundary classes, one per component in traced orientation.
// Throws std::invalid_argument when the surface has non-negative Euler
// characteristic (disc and annulus are handled separately by callers).
std::vector<CyclicWord> peripheral_structure(const RibbonSurface& s);

struct BoundaryMatch {
  int source;
  int target;
  int exponent;  // +1 or -1
};

struct DecisionReport {
  enum class Reason { ok, not_isomorphism, boundary_class_not_peripheral, boundary_map_not_bijective };

  bool geometric = false;
  int orientation_sign = 0;  // +1, -1, or 0 = undetermined
  Reason reason = Reason::ok;
  int failed_component = -1;                    // set for boundary_class_not_peripheral
  std::vector<BoundaryMatch> boundary_matching; // non-empty iff geometric

  std::string reason_str() const;
  std::string str() const;  // line-oriented rendering
};

// Decides whether the homotopy equivalence represented by f is homotopic to
// a homeomorphism: f must be an isomorphism, every boundary class must map
// to a primitive peripheral class, and the induced component map must be a
// bijection. orientation_sign is read off the first non-degenerate bracket
// comparison. Throws std::invalid_argument on disc/annulus inputs or when
// ranks do not match the surfaces.
DecisionReport is_geometric(const Homomorphism& f, const RibbonSurface& s1,
                            const RibbonSurface& s2);

struct WitnessPair {
  CyclicWord x;
  CyclicWord y;
};

// Searches class pairs in order of total length (then spelling) for one on
// which f fails to commute with the bracket; `strict` also accepts
// anticommuting pairs. Spends at most `budget` bracket evaluations (every
// tested pair costs two). Requires f to be an isomorphism.
std::optional<WitnessPair> find_witness(const Homomorphism& f, const RibbonSurface& s1,
                                        const RibbonSurface& s2, int max_total_length,
                                        long long budget, bool strict = false);

}  // namespace goldman
