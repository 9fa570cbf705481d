#pragma once

#include <utility>
#include <vector>

#include "goldman/surface.hpp"

namespace goldman {

// A free homotopy class put in taut position on the ribbon surface. The
// curve visits the vertex disk once per letter: junction i enters through
// the dart arc inverse(letter[i-1]) and leaves through the arc letter[i].
// Each junction is a chord of the disk; its two endpoints get slots on the
// dart arcs, and the joint slot assignment over both curves of a pair is
// what makes crossings readable from circle positions alone.
class StrandSystem {
 public:
  struct Junction {
    Letter in_dart;
    Letter out_dart;
  };
  struct EndSlot {
    int arc_position = -1;  // index of the arc in the surface dart order
    int index = -1;         // slot within the arc, counterclockwise
    int circle = -1;        // global position on the disk boundary circle
  };

  int curve_id = 0;
  CyclicWord word;
  std::vector<Junction> junctions;
  std::vector<EndSlot> in_slot;   // per junction: the arrival endpoint
  std::vector<EndSlot> out_slot;  // per junction: the departure endpoint
};

struct Crossing {
  int x_junction;
  int y_junction;
  int sign;  // +1 or -1
};

// Puts the pair (x = curve 0, y = curve 1) in joint taut position. Ends on
// each arc are ordered by strand itineraries (divergence within
// len(x)+len(y) letters, the Fine-Wilf bound); strands that never diverge
// are pushed off to one side so parallel copies do not cross. Throws
// std::invalid_argument on a trivial class.
std::pair<StrandSystem, StrandSystem> build_strand_pair(const RibbonSurface& s,
                                                        const CyclicWord& x,
                                                        const CyclicWord& y);

// All transversal intersections between the two curves: junction chords
// whose endpoints alternate around the circle. Sign is +1 when the
// counterclockwise order is (x_in, y_in, x_out, y_out), -1 when it is
// (x_in, y_out, x_out, y_in).
std::vector<Crossing> crossings(const StrandSystem& sys_x, const StrandSystem& sys_y);

// Checks that for every edge band the passage order at one end arc is the
// exact reverse of the order at the other end arc, i.e. nothing crosses
// inside a band.
bool band_consistent(const RibbonSurface& s, const StrandSystem& sys_x,
                     const StrandSystem& sys_y);

}  // namespace goldman
