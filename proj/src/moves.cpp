#include "surface_links/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "map_builder.hpp"

namespace surface_links {

using detail::MapBuilder;

std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::Flype: return "Flype";
    case MoveKind::NugatoryRemoval: return "NugatoryRemoval";
  }
  return "";
}

namespace {

int dart_index(const CombMap& m, const Dart& d) {
  int c = m.index_of(d.crossing);
  if (c < 0 || d.slot < 0 || d.slot > 3) throw PatternMismatch("no such dart");
  return dart_of(c, d.slot);
}

Dart dart_ref(const CombMap& m, int d) { return Dart{m.id(crossing_of(d)), slot_of(d)}; }

// Deletes crossings whose strands pass straight through, joining the loose
// ends; strands lying entirely inside the deleted set become free loops.
void splice_out(MapBuilder& b, const std::vector<int>& doomed) {
  std::set<int> gone(doomed.begin(), doomed.end());
  auto inside = [&](int d) { return gone.count(crossing_of(d)) > 0; };
  std::set<int> visited;
  std::vector<std::pair<int, int>> joins;
  for (int x : doomed)
    for (int s = 0; s < 4; ++s) {
      int e = b.partner(dart_of(x, s));
      if (inside(e)) continue;
      int r = dart_of(x, s);
      if (visited.count(r)) continue;
      for (;;) {
        visited.insert(r);
        int r2 = rotate(r, 2);
        visited.insert(r2);
        int p = b.partner(r2);
        if (!inside(p)) {
          joins.push_back({e, p});
          break;
        }
        r = p;
      }
    }
  int loops = 0;
  for (int x : doomed)
    for (int s = 0; s < 4; ++s) {
      int r = dart_of(x, s);
      if (visited.count(r)) continue;
      ++loops;
      while (!visited.count(r)) {
        visited.insert(r);
        visited.insert(rotate(r, 2));
        r = b.partner(rotate(r, 2));
      }
    }
  for (auto [e, p] : joins) b.link(e, p);
  for (int x : doomed) b.remove_crossing(x);
  b.add_unknots(loops);
}

// Turns a crossing set over: slot s becomes 1 - s, which reverses the local
// orientation and swaps over and under, so each crossing keeps its type.
int turned(int d) { return dart_of(crossing_of(d), 1 - slot_of(d) + 4); }

struct FlypeGeometry {
  int c = 0, k = 0;
  std::vector<char> in;  // T1 membership by crossing index
  int t_ne = 0, t_se = 0, u_d = 0, u_c = 0;
};

int next_boundary(const CombMap& m, const std::vector<char>& in, int stub) {
  int d = rotate(stub, 1);
  int guard = 0;
  while (in[crossing_of(m.partner(d))]) {
    d = rotate(m.partner(d), 1);
    if (++guard > m.dart_count()) return -1;
  }
  return d;
}

std::optional<FlypeGeometry> flype_geometry(const CombMap& m, int c, int k, std::vector<char> in) {
  const int n = m.size();
  if (in[c]) return std::nullopt;
  FlypeGeometry g;
  g.c = c;
  g.k = k;
  g.t_se = m.partner(dart_of(c, k));
  g.t_ne = m.partner(dart_of(c, k + 1));
  if (!in[crossing_of(g.t_se)] || !in[crossing_of(g.t_ne)]) return std::nullopt;
  for (int s : {k + 2, k + 3}) {
    int p = m.partner(dart_of(c, s));
    if (crossing_of(p) == c || in[crossing_of(p)]) return std::nullopt;
  }
  int v = 0, boundary = 0, internal_darts = 0;
  for (int x = 0; x < n; ++x) {
    if (!in[x]) continue;
    ++v;
    for (int s = 0; s < 4; ++s) {
      int p = m.partner(dart_of(x, s));
      if (in[crossing_of(p)])
        ++internal_darts;
      else
        ++boundary;
    }
  }
  if (boundary != 4) return std::nullopt;
  g.u_d = next_boundary(m, in, g.t_se);
  if (g.u_d < 0) return std::nullopt;
  g.u_c = next_boundary(m, in, g.u_d);
  if (g.u_c < 0 || next_boundary(m, in, g.t_ne) != g.t_se || next_boundary(m, in, g.u_c) != g.t_ne)
    return std::nullopt;
  std::set<int> four{g.t_se, g.t_ne, g.u_c, g.u_d};
  if (four.size() != 4) return std::nullopt;
  for (int u : {g.u_c, g.u_d})
    if (crossing_of(m.partner(u)) == c) return std::nullopt;
  // connected, and a disk: V - E + F = 1 over edges and faces inside T1
  std::vector<char> seen(n, 0);
  int first = crossing_of(g.t_se), reached = 1;
  seen[first] = 1;
  std::deque<int> queue{first};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s = 0; s < 4; ++s) {
      int y = crossing_of(m.partner(dart_of(x, s)));
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
    }
  }
  if (reached != v) return std::nullopt;
  int inner_faces = 0;
  std::vector<char> done(m.dart_count(), 0);
  for (int x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (int s = 0; s < 4; ++s) {
      int d0 = dart_of(x, s);
      if (done[d0]) continue;
      bool closed = true;
      int d = d0;
      do {
        done[d] = 1;
        if (!in[crossing_of(m.partner(d))]) closed = false;
        d = next_in_face(m, d);
      } while (d != d0 && in[crossing_of(d)]);
      if (d != d0) closed = false;
      if (closed) ++inner_faces;
    }
  }
  if (v - internal_darts / 2 + inner_faces != 1) return std::nullopt;
  g.in = std::move(in);
  return g;
}

CombMap flype_result(const CombMap& m, const FlypeGeometry& g) {
  MapBuilder b(m);
  auto R = [&](int d) { return g.in[crossing_of(d)] ? turned(d) : d; };
  const int c = g.c, k = g.k;
  const int e_a = m.partner(dart_of(c, k + 2)), e_b = m.partner(dart_of(c, k + 3));
  const int e_c = m.partner(g.u_c), e_d = m.partner(g.u_d);
  for (int x = 0; x < m.size(); ++x) {
    if (!g.in[x]) continue;
    for (int s = 0; s < 4; ++s) {
      int d = dart_of(x, s), p = m.partner(d);
      if (g.in[crossing_of(p)]) b.link(R(d), R(p));
      if (m.oriented()) b.set_out(R(d), m.outgoing(d));
    }
  }
  b.link(e_a, R(g.t_se));
  b.link(e_b, R(g.t_ne));
  b.link(dart_of(c, k + 2), R(g.u_d));
  b.link(dart_of(c, k + 3), R(g.u_c));
  b.link(dart_of(c, k + 1), e_c);
  b.link(dart_of(c, k), e_d);
  for (int s = 0; s < 4; ++s) b.clear_out(dart_of(c, s));
  return b.build();
}

std::vector<FlypeGeometry> enumerate_flypes(const CombMap& m) {
  const int n = m.size();
  std::vector<FlypeGeometry> out;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      int t_se = m.partner(dart_of(c, k)), t_ne = m.partner(dart_of(c, k + 1));
      if (crossing_of(t_se) == c || crossing_of(t_ne) == c) continue;
      std::vector<std::pair<int, int>> edges;
      for (int d = 0; d < m.dart_count(); ++d) {
        int p = m.partner(d);
        if (d < p && crossing_of(d) != c && crossing_of(p) != c) edges.push_back({d, p});
      }
      std::set<std::vector<char>> tried;
      for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          auto cut = [&](int d) {
            return d == edges[i].first || d == edges[i].second || d == edges[j].first || d == edges[j].second;
          };
          std::vector<char> in(n, 0);
          in[crossing_of(t_se)] = 1;
          std::deque<int> queue{crossing_of(t_se)};
          while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int s = 0; s < 4; ++s) {
              int d = dart_of(x, s);
              if (cut(d)) continue;
              int y = crossing_of(m.partner(d));
              if (y == c || in[y]) continue;
              in[y] = 1;
              queue.push_back(y);
            }
          }
          if (!in[crossing_of(t_ne)] || !tried.insert(in).second) continue;
          if (auto g = flype_geometry(m, c, k, in)) out.push_back(std::move(*g));
        }
    }
  return out;
}

FlypeSite site_of(const CombMap& m, const FlypeGeometry& g) {
  FlypeSite s;
  s.crossing = m.id(g.c);
  s.corner = g.k;
  s.tangle_darts = {dart_ref(m, g.t_ne), dart_ref(m, g.t_se), dart_ref(m, g.u_d), dart_ref(m, g.u_c)};
  for (int x = 0; x < m.size(); ++x)
    if (g.in[x]) s.tangle.push_back(m.id(x));
  std::sort(s.tangle.begin(), s.tangle.end());
  return s;
}

FlypeGeometry geometry_of(const CombMap& m, const FlypeSite& site) {
  int c = m.index_of(site.crossing);
  if (c < 0 || site.corner < 0 || site.corner > 3) throw PatternMismatch("flype pivot not found");
  std::vector<char> in(m.size(), 0);
  for (int id : site.tangle) {
    int x = m.index_of(id);
    if (x < 0) throw PatternMismatch("flype tangle crossing not found");
    in[x] = 1;
  }
  auto g = flype_geometry(m, c, site.corner, in);
  if (!g) throw PatternMismatch("not a flype site");
  if (site_of(m, *g).tangle_darts != site.tangle_darts) throw PatternMismatch("flype tangle darts do not match the cut");
  return *g;
}

}  // namespace

std::vector<FlypeSite> find_flypes(const CombMap& m) {
  std::vector<FlypeSite> sites;
  const std::string form = canonical_form(m);
  for (const auto& g : enumerate_flypes(m)) {
    FlypeSite s = site_of(m, g);
    s.degenerate = canonical_form(flype_result(m, g)) == form;
    sites.push_back(std::move(s));
  }
  return sites;
}

CombMap apply_flype(const CombMap& m, const FlypeSite& site) { return flype_result(m, geometry_of(m, site)); }

namespace {

struct Nugatory {
  int c = 0, k = 0;
  std::vector<char> side_a;  // reached from slots k+1, k+2
  std::vector<char> side_b;  // reached from slots k+3, k
  int genus_a = 0, genus_b = 0;
};

std::vector<char> reach(const CombMap& m, int c, std::initializer_list<int> slots) {
  std::vector<char> in(m.size(), 0);
  std::deque<int> queue;
  for (int s : slots) {
    int y = crossing_of(m.partner(dart_of(c, s)));
    if (y != c && !in[y]) {
      in[y] = 1;
      queue.push_back(y);
    }
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int s = 0; s < 4; ++s) {
      int y = crossing_of(m.partner(dart_of(x, s)));
      if (y == c || in[y]) continue;
      in[y] = 1;
      queue.push_back(y);
    }
  }
  return in;
}

// Genus of one side with its two loose ends at c joined.
int closed_genus(const CombMap& m, int c, const std::vector<char>& side, int s1, int s2) {
  if (std::find(side.begin(), side.end(), 1) == side.end()) return 0;
  MapBuilder b(m.without_orientation().with_unknots(0));
  for (int x = 0; x < m.size(); ++x)
    if (!side[x]) b.remove_crossing(x);
  b.link(m.partner(dart_of(c, s1)), m.partner(dart_of(c, s2)));
  return genus(b.build());
}

std::optional<Nugatory> nugatory_at(const CombMap& m, const FaceStructure& fs, int c) {
  for (int k = 0; k < 2; ++k) {
    if (fs.face_of[dart_of(c, k)] != fs.face_of[dart_of(c, k + 2)]) continue;
    Nugatory nu;
    nu.c = c;
    nu.k = k;
    // A loose end of one side may not come back through the other side.
    bool split = true;
    for (int s : {k + 1, k + 2}) {
      int p = m.partner(dart_of(c, s));
      if (crossing_of(p) == c && slot_of(p) != ((k + 1) & 3) && slot_of(p) != ((k + 2) & 3)) split = false;
    }
    if (!split) continue;
    nu.side_a = reach(m, c, {k + 1, k + 2});
    nu.side_b = reach(m, c, {k + 3, k});
    for (int x = 0; x < m.size(); ++x)
      if (nu.side_a[x] && nu.side_b[x]) split = false;
    if (!split) continue;
    nu.genus_a = closed_genus(m, c, nu.side_a, k + 1, k + 2);
    nu.genus_b = closed_genus(m, c, nu.side_b, k + 3, k);
    return nu;
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> removable_nugatory(const CombMap& m) {
  FaceStructure fs = faces(m);
  std::vector<int> out;
  for (int c = 0; c < m.size(); ++c) {
    auto nu = nugatory_at(m, fs, c);
    if (nu && (nu->genus_a == 0 || nu->genus_b == 0)) out.push_back(m.id(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CombMap remove_nugatory(const CombMap& m, int crossing_id) {
  int c = m.index_of(crossing_id);
  if (c < 0) throw PatternMismatch("no such crossing");
  auto nu = nugatory_at(m, faces(m), c);
  if (!nu || (nu->genus_a != 0 && nu->genus_b != 0)) throw PatternMismatch("crossing is not removably nugatory");
  const int k = nu->k;
  auto empty = [](const std::vector<char>& v) { return std::find(v.begin(), v.end(), 1) == v.end(); };
  MapBuilder b(m);
  if (empty(nu->side_a) || empty(nu->side_b)) {
    splice_out(b, {c});
    return b.build();
  }
  // Turn the planar side over and reconnect the strands straight through.
  const auto& flip = nu->genus_a == 0 ? nu->side_a : nu->side_b;
  auto R = [&](int d) { return flip[crossing_of(d)] ? turned(d) : d; };
  for (int x = 0; x < m.size(); ++x) {
    if (!flip[x]) continue;
    for (int s = 0; s < 4; ++s) {
      int d = dart_of(x, s), p = m.partner(d);
      if (flip[crossing_of(p)]) b.link(R(d), R(p));
      if (m.oriented()) b.set_out(R(d), m.outgoing(d));
    }
  }
  b.link(R(m.partner(dart_of(c, k))), R(m.partner(dart_of(c, k + 2))));
  b.link(R(m.partner(dart_of(c, k + 1))), R(m.partner(dart_of(c, k + 3))));
  b.remove_crossing(c);
  return b.build();
}

namespace {

struct Triangle {
  std::array<int, 3> cross{};
  std::array<int, 3> slot{};
};

std::optional<Triangle> triangle_at(const CombMap& m, int d0) {
  Triangle t;
  int d = d0;
  for (int i = 0; i < 3; ++i) {
    t.cross[i] = crossing_of(d);
    t.slot[i] = slot_of(d);
    d = next_in_face(m, d);
  }
  if (d != d0) return std::nullopt;
  if (t.cross[0] == t.cross[1] || t.cross[1] == t.cross[2] || t.cross[0] == t.cross[2]) return std::nullopt;
  // strand along edge i is over at both ends, or under at both
  for (int i = 0; i < 3; ++i)
    if (((t.slot[i] ^ (t.slot[(i + 1) % 3] + 1)) & 1) == 0) return t;
  return std::nullopt;
}

bool r2_bigon(const CombMap& m, int d1) {
  int d2 = next_in_face(m, d1);
  if (next_in_face(m, d2) != d1 || crossing_of(d1) == crossing_of(d2)) return false;
  return ((slot_of(d1) ^ (slot_of(d2) + 1)) & 1) == 0;
}

CombMap apply_r3(const CombMap& m, const Triangle& t) {
  MapBuilder b(m);
  std::unordered_map<int, int> phi;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    phi[dart_of(t.cross[i], t.slot[i] + 2)] = dart_of(t.cross[j], t.slot[j] + 1);
    phi[dart_of(t.cross[j], t.slot[j] + 3)] = dart_of(t.cross[i], t.slot[i]);
  }
  auto image = [&](int d) {
    auto it = phi.find(d);
    return it == phi.end() ? d : it->second;
  };
  for (auto [o, target] : phi) {
    (void)target;
    b.link(image(o), image(m.partner(o)));
  }
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    b.link(dart_of(t.cross[j], t.slot[j] + 3), dart_of(t.cross[i], t.slot[i] + 2));
  }
  for (int i = 0; i < 3; ++i)
    for (int s = 0; s < 4; ++s) b.clear_out(dart_of(t.cross[i], s));
  if (m.oriented())
    for (auto [o, target] : phi) b.set_out(target, m.outgoing(o));
  return b.build();
}

}  // namespace

CombMap reidemeister(const CombMap& m, const MoveSite& site) {
  MapBuilder b(m);
  switch (site.kind) {
    case MoveKind::R1: {
      if (site.insert) {
        const int j = site.variant & 3;
        int x = b.add_crossing(b.fresh_id());
        if (site.a.crossing < 0) {
          if (m.unknots() == 0) throw PatternMismatch("no free loop to kink");
          b.link(dart_of(x, j), dart_of(x, j + 3));
          b.add_unknots(-1);
        } else {
          int a = dart_index(m, site.a), p = m.partner(a);
          b.link(a, dart_of(x, j));
          b.link(dart_of(x, j + 3), p);
        }
        b.link(dart_of(x, j + 1), dart_of(x, j + 2));
        return b.build();
      }
      int a = dart_index(m, site.a);
      if (m.partner(rotate(a, 1)) != rotate(a, 2)) throw PatternMismatch("no kink at this site");
      splice_out(b, {crossing_of(a)});
      return b.build();
    }
    case MoveKind::R2: {
      int a = dart_index(m, site.a);
      if (site.insert) {
        int d2 = dart_index(m, site.b);
        FaceStructure fs = faces(m);
        if (a == d2 || m.partner(a) == d2 || fs.face_of[a] != fs.face_of[d2])
          throw PatternMismatch("darts do not bound one face on different edges");
        int id = b.fresh_id();
        detail::insert_bigon(b, fs, a, d2, site.variant != 0, id, id + 1);
        return b.build();
      }
      if (!r2_bigon(m, a)) throw PatternMismatch("no removable bigon at this site");
      splice_out(b, {crossing_of(a), crossing_of(next_in_face(m, a))});
      return b.build();
    }
    case MoveKind::R3: {
      auto t = triangle_at(m, dart_index(m, site.a));
      if (!t) throw PatternMismatch("no R3 triangle at this site");
      return apply_r3(m, *t);
    }
    default:
      throw PatternMismatch("not a Reidemeister move");
  }
}

std::vector<MoveSite> reidemeister_sites(const CombMap& m, MoveKind kind) {
  std::vector<MoveSite> out;
  FaceStructure fs = faces(m);
  std::vector<char> face_done(fs.faces.size(), 0);
  for (int d = 0; d < m.dart_count(); ++d) {
    MoveSite s;
    s.kind = kind;
    s.a = dart_ref(m, d);
    if (kind == MoveKind::R1) {
      if (m.partner(rotate(d, 1)) == rotate(d, 2)) out.push_back(s);
      continue;
    }
    int f = fs.face_of[d];
    if (face_done[f]) continue;
    if ((kind == MoveKind::R2 && r2_bigon(m, d)) || (kind == MoveKind::R3 && triangle_at(m, d))) {
      face_done[f] = 1;
      out.push_back(s);
    }
  }
  return out;
}

std::string to_json(const std::vector<MoveRecord>& path) {
  auto dart = [](const Dart& d) { return nlohmann::json::array({d.crossing, d.slot}); };
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : path) {
    nlohmann::json j;
    j["kind"] = to_string(r.kind);
    j["before"] = r.before;
    j["after"] = r.after;
    if (r.flype) {
      j["crossing"] = r.flype->crossing;
      j["corner"] = r.flype->corner;
      j["tangle"] = r.flype->tangle;
      nlohmann::json darts = nlohmann::json::array();
      for (const auto& d : r.flype->tangle_darts) darts.push_back(dart(d));
      j["tangle_darts"] = darts;
    }
    if (r.move) {
      j["insert"] = r.move->insert;
      j["a"] = dart(r.move->a);
      j["b"] = dart(r.move->b);
      j["variant"] = r.move->variant;
    }
    if (r.kind == MoveKind::NugatoryRemoval) j["crossing"] = r.crossing;
    out.push_back(j);
  }
  return out.dump(2);
}

namespace {

struct Search {
  FlypeOrbit orbit;
  std::vector<int> parent;
  std::vector<FlypeSite> via;
};

// Breadth-first closure under flypes; stops once `target` is found.
Search search(const CombMap& start, int bound, const std::string* target) {
  Search s;
  std::map<std::string, int> index;
  auto add = [&](std::string form, CombMap m, int parent, FlypeSite site) {
    index.emplace(form, static_cast<int>(s.orbit.forms.size()));
    s.orbit.forms.push_back(std::move(form));
    s.orbit.maps.push_back(std::move(m));
    s.parent.push_back(parent);
    s.via.push_back(std::move(site));
  };
  add(canonical_form(start), start, -1, {});
  if (target && s.orbit.forms[0] == *target) return s;
  for (std::size_t i = 0; i < s.orbit.maps.size(); ++i) {
    const CombMap current = s.orbit.maps[i];
    std::vector<std::tuple<std::string, CombMap, FlypeSite>> next;
    for (const auto& g : enumerate_flypes(current)) {
      CombMap r = flype_result(current, g);
      std::string form = canonical_form(r);
      if (index.count(form)) continue;
      next.emplace_back(std::move(form), std::move(r), site_of(current, g));
    }
    std::sort(next.begin(), next.end(),
              [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
    for (auto& [form, r, site] : next) {
      if (index.count(form)) continue;
      if (static_cast<int>(s.orbit.forms.size()) >= bound) {
        s.orbit.truncated = true;
        return s;
      }
      bool hit = target && form == *target;
      add(std::move(form), std::move(r), static_cast<int>(i), std::move(site));
      if (hit) return s;
    }
  }
  return s;
}

}  // namespace

FlypeOrbit flype_orbit(const CombMap& m, int bound) { return search(m, bound, nullptr).orbit; }

FlypeEquivalence flype_equivalent(const CombMap& a, const CombMap& b, int bound) {
  FlypeEquivalence result;
  if (a.size() != b.size() || genus(a) != genus(b) || component_count(a) != component_count(b) ||
      a.oriented() != b.oriented() || (a.oriented() && writhe(a) != writhe(b)) ||
      is_alternating(a) != is_alternating(b))
    return result;
  const std::string target = canonical_form(b);
  Search s = search(a, bound, &target);
  const int last = static_cast<int>(s.orbit.forms.size()) - 1;
  if (s.orbit.forms[last] != target) {
    result.truncated = s.orbit.truncated;
    return result;
  }
  result.equivalent = true;
  for (int v = last; s.parent[v] >= 0; v = s.parent[v]) {
    MoveRecord r;
    r.kind = MoveKind::Flype;
    r.flype = s.via[v];
    r.before = s.orbit.forms[s.parent[v]];
    r.after = s.orbit.forms[v];
    result.path.push_back(std::move(r));
  }
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace surface_links
