#pragma once

// Exhaustive enumeration of small diagrams and Gauss codes.

#include <functional>
#include <vector>

#include "surface_links/comb_map.hpp"
#include "surface_links/gauss.hpp"

namespace surface_links {

// A connected checkerboard-colorable 4-valent map read in its rooted-code
// frame. Turning crossing c by parity[c] slots makes every edge join an even
// slot to an odd one.
struct Shadow {
  CombMap map;
  std::vector<int> parity;
};

// One shadow per isomorphism class (orientation-preserving), all genera.
std::vector<Shadow> colorable_shadows(int crossings);

// Connected colorable diagrams with the given crossing count, one per
// isomorphism class, sorted by canonical form.
std::vector<CombMap> colorable_diagrams(int crossings, bool alternating_only = false);
// Crossing counts 1..max_crossings, ordered by crossing count then canonical form.
std::vector<CombMap> census(int max_crossings, bool alternating_only = false);

// Double-occurrence words with the given number of labels, one per class of
// canonical_shadow. The first occurrence of each label is an over token.
std::vector<GaussCode> code_shadows(int crossings);
// All over/under and sign choices on a shadow, one per canonical_gauss class.
std::vector<GaussCode> decorations(const GaussCode& shadow);

// Worker count: SURFACE_LINKS_THREADS when set, else the hardware concurrency.
int worker_count();
// Runs body(i) for i in [0, count) on the worker pool.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace surface_links
