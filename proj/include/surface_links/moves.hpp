#pragma once

// Diagram rewriting: Reidemeister moves on the surface, flypes, removal of
// removable nugatory crossings and flype-orbit search.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surface_links/comb_map.hpp"

namespace surface_links {

class PatternMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Pivot crossing c whose slots corner and corner+1 lead into the tangle T1.
// tangle_darts lists the boundary darts of T1 counterclockwise, starting with
// the one fed by slot corner+1 of c.
struct FlypeSite {
  int crossing = 0;  // crossing id
  int corner = 0;
  std::array<Dart, 4> tangle_darts{};
  std::vector<int> tangle;  // crossing ids of T1, sorted
  bool degenerate = false;  // the flype returns an isomorphic diagram
};

std::vector<FlypeSite> find_flypes(const CombMap& m);
// Throws PatternMismatch when the site does not describe a flype of m.
CombMap apply_flype(const CombMap& m, const FlypeSite& site);

std::vector<int> removable_nugatory(const CombMap& m);
// Removes a removable nugatory crossing (given by id) by a flype and an R1.
CombMap remove_nugatory(const CombMap& m, int crossing_id);

enum class MoveKind { R1, R2, R3, Flype, NugatoryRemoval };
std::string to_string(MoveKind k);

// Site of a Reidemeister move.
//   R1 remove: a = (c, k) with slots k+1 and k+2 joined by a loop edge.
//   R1 insert: kink on the edge of dart a with the loop at slots variant+1,
//              variant+2 of the new crossing; a.crossing = -1 kinks a free loop.
//   R2 remove: a is a dart of a bigon face whose strands pass on the same level.
//   R2 insert: a and b are darts of one face; variant 1 puts a's strand over.
//   R3:        a is a dart of a triangle face with a strand over at both of its
//              triangle crossings.
struct MoveSite {
  MoveKind kind = MoveKind::R1;
  bool insert = false;
  Dart a{};
  Dart b{};
  int variant = 0;
};

CombMap reidemeister(const CombMap& m, const MoveSite& site);
// All removal sites for R1 and R2 and all R3 sites, in a fixed order.
std::vector<MoveSite> reidemeister_sites(const CombMap& m, MoveKind kind);

struct MoveRecord {
  MoveKind kind = MoveKind::Flype;
  std::optional<FlypeSite> flype;
  std::optional<MoveSite> move;
  int crossing = -1;  // for nugatory removal
  std::string before;
  std::string after;
};

std::string to_json(const std::vector<MoveRecord>& path);

inline constexpr int kDefaultOrbitBound = 10000;

struct FlypeOrbit {
  std::vector<std::string> forms;  // canonical forms in discovery order
  std::vector<CombMap> maps;       // a representative of each
  bool truncated = false;
};

FlypeOrbit flype_orbit(const CombMap& m, int bound = kDefaultOrbitBound);

struct FlypeEquivalence {
  bool equivalent = false;
  bool truncated = false;  // the search stopped at the bound
  std::vector<MoveRecord> path;
};

// Semi-decision: searches the flype orbit of a for b, up to the bound.
FlypeEquivalence flype_equivalent(const CombMap& a, const CombMap& b, int bound = kDefaultOrbitBound);

}  // namespace surface_links
