#pragma once

// Structural classification: connectivity, cellular embedding, primeness.

#include <string>
#include <vector>

#include "surface_links/comb_map.hpp"
#include "surface_links/gauss.hpp"

namespace surface_links {

struct StructureReport {
  bool connected = false;
  bool cellular = false;
  bool weakly_prime = false;
  bool prime = false;
  std::vector<int> removable_nugatory;  // crossing ids
  int split_components = 0;
  // Cases the diagrammatic criteria leave open, e.g. "stabilized" or
  // "annular_cut" (two edges sharing two faces without separating).
  std::vector<std::string> flags;
};

StructureReport classify(const CombMap& m);
StructureReport classify_virtual(const GaussCode& code);

std::string to_json(const StructureReport& r);

}  // namespace surface_links
