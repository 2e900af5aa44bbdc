#pragma once

// Independent reference computations used by the unit tests and the
// acceptance runner. None of these go through the curve-diagram pipeline.

#include <random>
#include <vector>

#include "surface_links/comb_map.hpp"
#include "surface_links/curves.hpp"
#include "surface_links/exact.hpp"
#include "surface_links/gauss.hpp"
#include "surface_links/goeritz.hpp"
#include "surface_links/moves.hpp"

namespace oracle {

using namespace surface_links;

// Closure of a braid word on the given number of strands; generator i > 0
// crosses strands i and i+1 positively, -i negatively.
GaussCode braid_closure(const std::vector<int>& word, int strands);

// Goeritz matrix of the surface of one color from the Tait graph of the other:
// regions of the other color as vertices,
// off-diagonal entries minus the summed crossing types, diagonal completing
// the row sums to zero, last face deleted. Needs a planar connected map.
IntMatrix classical_goeritz(const CombMap& m, Color color);

// Random closed walk in the dual graph of m of roughly the given length.
DualWalk random_dual_walk(const CombMap& m, std::mt19937& rng, int length);

// Algebraic intersection number of two dual walks, computed by sliding b onto
// a cycle of the diagram graph and counting the edges a crosses.
int homological_intersection(const CombMap& m, const DualWalk& a, const DualWalk& b);

// A nondegenerate flype site of m, if any, in find_flypes order.
std::vector<FlypeSite> nondegenerate_flypes(const CombMap& m);

// Crossing ids shuffled by rng.
CombMap relabeled(const CombMap& m, std::mt19937& rng);

}  // namespace oracle
