#pragma once

// Link diagrams on closed oriented surfaces as 4-valent combinatorial maps.
//
// Darts are numbered 4*c + s for crossing index c and slot s. Slots run
// counterclockwise around the crossing; slots 0 and 2 carry the overstrand,
// slots 1 and 3 the understrand. A strand entering at slot s leaves at s+2.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace surface_links {

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int dart_of(int crossing, int slot) { return 4 * crossing + (slot & 3); }
inline constexpr int crossing_of(int dart) { return dart >> 2; }
inline constexpr int slot_of(int dart) { return dart & 3; }
inline constexpr int rotate(int dart, int by) { return dart_of(crossing_of(dart), slot_of(dart) + by); }

struct Dart {
  int crossing = 0;  // crossing id (external label)
  int slot = 0;
  bool operator==(const Dart&) const = default;
};

class CombMap {
 public:
  CombMap() = default;

  // partner[d] is the dart matched with d; ids default to 0..n-1.
  static CombMap from_partner(std::vector<int> partner, std::vector<int> ids = {}, int unknots = 0);

  // Edges and orientation given in terms of crossing ids, as in the JSON format.
  static CombMap from_edges(std::vector<int> ids, const std::vector<std::array<Dart, 2>>& edges,
                            const std::vector<Dart>& orientation = {}, bool oriented = false,
                            int unknots = 0, std::optional<int> declared_genus = {});

  int size() const { return static_cast<int>(ids_.size()); }
  int dart_count() const { return 4 * size(); }
  int partner(int d) const { return partner_[d]; }
  const std::vector<int>& partners() const { return partner_; }
  int id(int c) const { return ids_[c]; }
  const std::vector<int>& ids() const { return ids_; }
  int index_of(int id) const;
  int unknots() const { return unknots_; }
  std::optional<int> declared_genus() const { return declared_genus_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

  bool oriented() const { return !out_.empty() || (size() == 0 && oriented_empty_); }
  // True when the strand leaves its crossing through d.
  bool outgoing(int d) const;
  const std::vector<std::uint8_t>& out_flags() const { return out_; }
  // One outgoing dart per oriented strand component, in stored order.
  const std::vector<int>& orientation_reps() const { return reps_; }

  CombMap with_orientation(std::vector<std::uint8_t> out) const;
  CombMap with_orientation_reps(const std::vector<int>& reps) const;
  CombMap without_orientation() const;
  // Orients every component along its smallest dart.
  CombMap with_default_orientation() const;
  CombMap with_declared_genus(std::optional<int> g) const;
  CombMap with_ids(std::vector<int> ids) const;
  CombMap with_unknots(int k) const;

  bool operator==(const CombMap&) const = default;

 private:
  void validate() const;
  void index_ids();

  std::vector<int> partner_;
  std::vector<int> ids_;
  std::vector<int> id_index_sorted_;  // ids sorted, paired with index below
  std::vector<int> id_index_pos_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::uint8_t> out_;
  std::vector<int> reps_;
  int unknots_ = 0;
  bool oriented_empty_ = false;
  std::optional<int> declared_genus_;
};

// Next dart along the face lying to the left of d.
inline int next_in_face(const CombMap& m, int d) { return rotate(m.partner(d), 3); }
// Next dart along the strand: the dart through which the strand leaves the
// crossing it enters via partner(d).
inline int next_on_strand(const CombMap& m, int d) { return rotate(m.partner(d), 2); }

struct FaceStructure {
  std::vector<std::vector<int>> faces;  // dart cycles; corner slot_of(d) of each dart
  std::vector<int> face_of;             // per dart
  int free_loop_faces = 0;              // two per crossingless component
  std::optional<std::vector<int>> coloring;  // 0/1 per face cycle

  int count() const { return static_cast<int>(faces.size()) + free_loop_faces; }
};

FaceStructure faces(const CombMap& m);
// Connected pieces of the crossing graph (free loops excluded), as crossing lists.
std::vector<std::vector<int>> connected_pieces(const CombMap& m);
// Strand components: each is the cyclic list of darts through which the strand
// leaves successive crossings, in the traversal direction starting at its
// representative. Without orientation the smallest dart fixes the direction.
std::vector<std::vector<int>> strand_components(const CombMap& m);
int component_count(const CombMap& m);  // strand components plus free loops

int genus(const CombMap& m);
bool is_alternating(const CombMap& m);
// Throws NotColorable when the face adjacency graph is not bipartite.
class NotColorable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
FaceStructure checkerboard_coloring(const CombMap& m);
bool is_colorable(const CombMap& m);

// +1 for a right-handed crossing with respect to the surface orientation.
int crossing_sign(const CombMap& m, int c);
int writhe(const CombMap& m);

// Over/under swapped at every crossing.
CombMap mirror(const CombMap& m);
// Surface orientation reversed.
CombMap reflect(const CombMap& m);
// Every strand direction reversed.
CombMap reverse_strands(const CombMap& m);

struct IsoFlags {
  bool allow_reflection = false;  // orientation-reversing homeomorphism of the surface
  bool allow_mirror = false;      // over/under swap
  bool ignore_link_orientation = false;
};

struct DiagramIso {
  std::vector<int> crossing_map;  // crossing index in a -> index in b
  std::vector<int> dart_map;      // dart in a -> dart in b
  bool reflection = false;
  bool mirror = false;
};

std::string canonical_form(const CombMap& m, const IsoFlags& flags = {});
std::optional<DiagramIso> isomorphic(const CombMap& a, const CombMap& b, const IsoFlags& flags = {});
bool check_iso(const CombMap& a, const CombMap& b, const DiagramIso& iso, const IsoFlags& flags = {});

// BFS code of the connected piece containing start, read with the given
// symmetry. Exposed for census generation. When shadow is set over/under is
// ignored and the code describes the underlying 4-valent map.
std::vector<std::uint16_t> rooted_code(const CombMap& m, int start, bool reflect, bool mirror,
                                       bool with_orientation, bool shadow,
                                       std::vector<int>* label = nullptr,
                                       std::vector<int>* entry = nullptr);

std::string to_json(const CombMap& m);
CombMap from_json(const std::string& text);

}  // namespace surface_links
