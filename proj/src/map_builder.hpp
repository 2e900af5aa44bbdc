#pragma once

// Mutable scratch form of a CombMap used by the rewriting code.

#include <cstdint>
#include <optional>
#include <vector>

#include "surface_links/comb_map.hpp"

namespace surface_links::detail {

class MapBuilder {
 public:
  explicit MapBuilder(const CombMap& m);

  int add_crossing(int id);
  void remove_crossing(int c) { removed_[c] = 1; }
  void link(int a, int b) {
    partner_[a] = b;
    partner_[b] = a;
  }
  int partner(int d) const { return partner_[d]; }
  int size() const { return static_cast<int>(ids_.size()); }
  int fresh_id() const;
  void add_unknots(int k) { unknots_ += k; }
  void set_out(int d, bool out) { out_[d] = out ? 1 : 0; }
  void clear_out(int d) { out_[d] = -1; }
  // 1 outgoing, 0 incoming, -1 unknown.
  int out(int d) const { return out_[d]; }
  bool removed(int c) const { return removed_[c] != 0; }
  void set_id(int c, int id) { ids_[c] = id; }

  // Compacts away removed crossings. Orientation of new darts is propagated
  // along strands; strands with no known direction get the default one.
  CombMap build() const;

 private:
  std::vector<int> partner_;
  std::vector<int> ids_;
  std::vector<std::int8_t> out_;
  std::vector<char> removed_;
  int unknots_ = 0;
  bool oriented_ = false;
  std::optional<int> declared_genus_;
};

// Pushes the edge of d1 across the face to its left over (or under) the edge
// of d2, creating a bigon. Both darts must lie on that face and belong to
// different edges. Returns the two new crossings (x, y): x is met first along
// the strand of d1.
std::pair<int, int> insert_bigon(MapBuilder& b, const FaceStructure& fs, int d1, int d2, bool first_over,
                                 int id_x, int id_y);

}  // namespace surface_links::detail
