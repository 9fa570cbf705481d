#pragma once

#include "goldman/chain.hpp"
#include "goldman/strands.hpp"
#include "goldman/surface.hpp"

namespace goldman {

// Class of the loop product based at a crossing of junction i of x with
// junction j of y. Throws std::out_of_range on bad indices.
CyclicWord splice(const CyclicWord& x, std::size_t i, const CyclicWord& y, std::size_t j);

// The Goldman bracket [x, y]: the signed sum, over transversal crossings of
// taut representatives, of the classes of the spliced loop products. The
// trivial class brackets to zero with everything.
Chain bracket(const RibbonSurface& s, const CyclicWord& x, const CyclicWord& y);

// Bilinear extension to integer chains.
Chain bracket_chain(const RibbonSurface& s, const Chain& u, const Chain& v);

}  // namespace goldman
