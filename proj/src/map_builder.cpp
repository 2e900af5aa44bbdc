#include "map_builder.hpp"

#include <algorithm>

namespace surface_links::detail {

MapBuilder::MapBuilder(const CombMap& m)
    : partner_(m.partners()),
      ids_(m.ids()),
      out_(m.dart_count(), -1),
      removed_(m.size(), 0),
      unknots_(m.unknots()),
      oriented_(m.oriented()),
      declared_genus_(m.declared_genus()) {
  if (oriented_)
    for (int d = 0; d < m.dart_count(); ++d) out_[d] = m.outgoing(d) ? 1 : 0;
}

int MapBuilder::add_crossing(int id) {
  int c = size();
  ids_.push_back(id);
  removed_.push_back(0);
  for (int s = 0; s < 4; ++s) {
    partner_.push_back(-1);
    out_.push_back(-1);
  }
  return c;
}

int MapBuilder::fresh_id() const {
  int best = -1;
  for (int c = 0; c < size(); ++c) best = std::max(best, ids_[c]);
  return best + 1;
}

CombMap MapBuilder::build() const {
  std::vector<int> index(size(), -1);
  std::vector<int> ids;
  for (int c = 0; c < size(); ++c)
    if (!removed_[c]) {
      index[c] = static_cast<int>(ids.size());
      ids.push_back(ids_[c]);
    }
  std::vector<int> partner(4 * ids.size());
  std::vector<std::int8_t> out(4 * ids.size());
  for (int c = 0; c < size(); ++c) {
    if (removed_[c]) continue;
    for (int s = 0; s < 4; ++s) {
      int p = partner_[dart_of(c, s)];
      if (p < 0 || removed_[crossing_of(p)]) throw StructuralError("rewrite left a dangling dart");
      partner[dart_of(index[c], s)] = dart_of(index[crossing_of(p)], slot_of(p));
      out[dart_of(index[c], s)] = out_[dart_of(c, s)];
    }
  }
  CombMap m = CombMap::from_partner(std::move(partner), std::move(ids), unknots_).with_declared_genus(declared_genus_);
  if (!oriented_) return m;
  // Orbits of next_on_strand come in pairs C, rotate(C, 2); one of them is outgoing.
  const int n = m.dart_count();
  std::vector<int> orbit(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < n; ++d0) {
    if (orbit[d0] >= 0) continue;
    std::vector<int> cyc;
    int d = d0;
    do {
      orbit[d] = static_cast<int>(orbits.size());
      cyc.push_back(d);
      d = next_on_strand(m, d);
    } while (d != d0);
    orbits.push_back(std::move(cyc));
  }
  std::vector<std::int8_t> dir(orbits.size(), -1);
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (int d : orbits[k])
      if (out[d] >= 0) {
        if (dir[k] >= 0 && dir[k] != out[d]) throw StructuralError("inconsistent strand directions");
        dir[k] = out[d];
      }
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    int twin = orbit[rotate(orbits[k][0], 2)];
    if (dir[k] >= 0 && dir[twin] >= 0 && dir[k] == dir[twin]) throw StructuralError("inconsistent strand directions");
    if (dir[k] < 0) dir[k] = dir[twin] >= 0 ? 1 - dir[twin] : (orbits[k][0] < orbits[twin][0] ? 1 : 0);
    for (int d : orbits[k]) out[d] = dir[k];
  }
  std::vector<std::uint8_t> flags(out.begin(), out.end());
  return m.with_orientation(std::move(flags));
}

std::pair<int, int> insert_bigon(MapBuilder& b, const FaceStructure& fs, int d1, int d2, bool first_over, int id_x,
                                 int id_y) {
  if (d1 == d2 || b.partner(d1) == d2) throw StructuralError("bigon needs two distinct edges");
  if (fs.face_of[d1] != fs.face_of[d2]) throw StructuralError("bigon edges do not share a face");
  const int p1 = b.partner(d1), p2 = b.partner(d2);
  const int x = b.add_crossing(id_x), y = b.add_crossing(id_y);
  // compass slots: strand one runs S -> N at x and N -> S at y, strand two E -> W
  const int N = first_over ? 0 : 1, W = first_over ? 1 : 2, S = first_over ? 2 : 3, E = first_over ? 3 : 0;
  b.link(dart_of(x, S), d1);
  b.link(dart_of(x, N), dart_of(y, N));
  b.link(dart_of(y, S), p1);
  b.link(dart_of(y, E), d2);
  b.link(dart_of(y, W), dart_of(x, E));
  b.link(dart_of(x, W), p2);
  return {x, y};
}

}  // namespace surface_links::detail
