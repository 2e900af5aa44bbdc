#include "surface_links/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <nlohmann/json.hpp>

#include "map_builder.hpp"
#include "surface_links/moves.hpp"

namespace surface_links {

namespace {

struct Cut {
  std::vector<char> side;  // crossings on the side of the first edge's smaller dart
  bool separates = false;
  int genus_a = 0, genus_b = 0;
};

// Genus of one side of a two-edge cut with its loose ends joined.
int closed_genus(const CombMap& m, const std::vector<char>& side, bool which, int d1, int d2) {
  detail::MapBuilder b(m.without_orientation().with_unknots(0));
  for (int x = 0; x < m.size(); ++x)
    if ((side[x] != 0) != which) b.remove_crossing(x);
  auto end_in = [&](int d) { return (side[crossing_of(d)] != 0) == which ? d : m.partner(d); };
  b.link(end_in(d1), end_in(d2));
  return genus(b.build());
}

}  // namespace

StructureReport classify(const CombMap& m) {
  StructureReport r;
  const auto pieces = connected_pieces(m);
  r.split_components = static_cast<int>(pieces.size()) + m.unknots();
  r.connected = r.split_components == 1;
  const int g = genus(m);
  const bool matches_declared = !m.declared_genus() || *m.declared_genus() == g;
  if (!matches_declared) r.flags.push_back("stabilized");
  r.cellular = r.connected && matches_declared;
  r.removable_nugatory = removable_nugatory(m);

  if (m.size() == 0) {
    r.weakly_prime = r.split_components == 1;
    // The trivial two-component diagram counts as prime.
    r.prime = r.split_components <= 2 && r.split_components > 0;
    return r;
  }
  if (!r.connected) return r;

  FaceStructure fs = faces(m);
  std::vector<int> edge_dart;
  for (int d = 0; d < m.dart_count(); ++d)
    if (d < m.partner(d)) edge_dart.push_back(d);
  bool disk_cut = false, other_cut = false, annular = false;
  for (std::size_t i = 0; i < edge_dart.size(); ++i)
    for (std::size_t j = i + 1; j < edge_dart.size(); ++j) {
      int d1 = edge_dart[i], d2 = edge_dart[j];
      std::set<int> f1{fs.face_of[d1], fs.face_of[m.partner(d1)]};
      std::set<int> f2{fs.face_of[d2], fs.face_of[m.partner(d2)]};
      if (f1 != f2 || f1.size() != 2) continue;
      auto cut = [&](int d) { return d == d1 || d == m.partner(d1) || d == d2 || d == m.partner(d2); };
      std::vector<char> side(m.size(), 0);
      side[crossing_of(d1)] = 1;
      std::deque<int> queue{crossing_of(d1)};
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s = 0; s < 4; ++s) {
          int d = dart_of(x, s);
          if (cut(d)) continue;
          int y = crossing_of(m.partner(d));
          if (!side[y]) {
            side[y] = 1;
            queue.push_back(y);
          }
        }
      }
      if (side[crossing_of(m.partner(d1))]) {
        annular = true;
        continue;
      }
      int ga = closed_genus(m, side, true, d1, d2);
      int gb = closed_genus(m, side, false, d1, d2);
      if (ga == 0 || gb == 0)
        disk_cut = true;
      else
        other_cut = true;
    }
  if (annular) r.flags.push_back("annular_cut");
  r.weakly_prime = !disk_cut;
  r.prime = !disk_cut && !other_cut;
  return r;
}

StructureReport classify_virtual(const GaussCode& code) { return classify(gauss_to_surface(code)); }

std::string to_json(const StructureReport& r) {
  nlohmann::json j;
  j["connected"] = r.connected;
  j["cellular"] = r.cellular;
  j["weaklyPrime"] = r.weakly_prime;
  j["prime"] = r.prime;
  j["removableNugatory"] = r.removable_nugatory;
  j["splitComponents"] = r.split_components;
  j["flags"] = r.flags;
  return j.dump();
}

}  // namespace surface_links
