#pragma once

// Gauss codes, virtual diagrams and the passage between virtual diagrams and
// cellularly embedded surface diagrams.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "surface_links/comb_map.hpp"

namespace surface_links {

class GaussSyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GaussToken {
  bool over = true;
  int label = 0;
  int sign = 1;
  bool operator==(const GaussToken&) const = default;
};

struct GaussCode {
  // An empty component is a crossingless loop.
  std::vector<std::vector<GaussToken>> components;
  bool operator==(const GaussCode&) const = default;
  int crossing_count() const;
};

GaussCode parse_gauss(const std::string& text);
std::string to_string(const GaussCode& code);
void validate(const GaussCode& code);

// Cellular surface diagram whose strand traversal reproduces the code.
CombMap gauss_to_surface(const GaussCode& code);
// Strand traversal of an oriented map (default orientation if none).
GaussCode gauss_of_map(const CombMap& m);

struct VirtualDiagram {
  CombMap graph;                 // oriented, genus 0; virtual vertices are plain intersections
  std::vector<char> is_virtual;  // per vertex of graph
  int virtual_count() const;
};

VirtualDiagram surface_to_virtual(const CombMap& m);
GaussCode gauss_of(const VirtualDiagram& v);
void validate(const VirtualDiagram& v);

// Two virtual crossings forming a bigon between the edges of d1 and d2, which
// must share a face of the planar graph. Leaves the Gauss code unchanged.
VirtualDiagram virtual_r2(const VirtualDiagram& v, int d1, int d2);

std::string canonical_gauss(const GaussCode& code);
// Key of the underlying double-occurrence word, ignoring over/under and signs.
std::string canonical_shadow(const GaussCode& code);

struct Lasso {
  std::vector<int> vertices;                 // classical vertices of the graph
  std::vector<std::array<int, 2>> core;      // tree edges (dart pairs) joining them
  std::vector<int> boundary;                 // darts leaving the neighbourhood, boundary order
};

// A disk around a tree of virtual-free edges through every classical vertex.
std::optional<Lasso> find_lasso(const VirtualDiagram& v);

struct Site {
  int component = 0;
  int edge = 0;  // edge e joins token e to token e+1 along the component
};

GaussCode connect_sum(const GaussCode& a, const GaussCode& b, Site site_a, Site site_b);

}  // namespace surface_links
