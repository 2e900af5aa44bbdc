#include "surface_links/comb_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <nlohmann/json.hpp>

namespace surface_links {

namespace {

std::vector<std::array<int, 2>> edges_from_partner(const std::vector<int>& partner) {
  std::vector<std::array<int, 2>> edges;
  for (int d = 0; d < static_cast<int>(partner.size()); ++d)
    if (d < partner[d]) edges.push_back({d, partner[d]});
  return edges;
}

// Component index per dart; components numbered by smallest dart.
std::vector<int> component_ids(const std::vector<int>& partner, int* count) {
  const int n = static_cast<int>(partner.size());
  std::vector<int> comp(n, -1);
  int k = 0;
  for (int d0 = 0; d0 < n; ++d0) {
    if (comp[d0] >= 0) continue;
    int d = d0;
    while (comp[d] < 0) {
      comp[d] = k;
      comp[partner[d]] = k;
      d = rotate(partner[d], 2);
    }
    ++k;
  }
  if (count) *count = k;
  return comp;
}

}  // namespace

CombMap CombMap::from_partner(std::vector<int> partner, std::vector<int> ids, int unknots) {
  CombMap m;
  if (partner.size() % 4 != 0) throw StructuralError("dart count is not a multiple of 4");
  if (ids.empty()) {
    ids.resize(partner.size() / 4);
    std::iota(ids.begin(), ids.end(), 0);
  }
  if (ids.size() * 4 != partner.size()) throw StructuralError("crossing id count does not match darts");
  if (unknots < 0) throw StructuralError("negative free loop count");
  m.partner_ = std::move(partner);
  m.ids_ = std::move(ids);
  m.unknots_ = unknots;
  m.validate();
  m.index_ids();
  m.edges_ = edges_from_partner(m.partner_);
  return m;
}

CombMap CombMap::from_edges(std::vector<int> ids, const std::vector<std::array<Dart, 2>>& edges,
                            const std::vector<Dart>& orientation, bool oriented, int unknots,
                            std::optional<int> declared_genus) {
  CombMap m;
  if (unknots < 0) throw StructuralError("negative free loop count");
  m.ids_ = std::move(ids);
  m.unknots_ = unknots;
  m.index_ids();
  const int n = m.size();
  m.partner_.assign(4 * n, -1);
  auto dart = [&](const Dart& x) {
    if (x.slot < 0 || x.slot > 3) throw StructuralError("slot out of range");
    return dart_of(m.index_of(x.crossing), x.slot);
  };
  for (const auto& e : edges) {
    int a = dart(e[0]), b = dart(e[1]);
    if (a == b) throw StructuralError("dart matched with itself");
    if (m.partner_[a] >= 0 || m.partner_[b] >= 0) throw StructuralError("dart matched twice");
    m.partner_[a] = b;
    m.partner_[b] = a;
    m.edges_.push_back({a, b});
  }
  m.validate();
  if (declared_genus) {
    if (*declared_genus < 0) throw StructuralError("negative declared genus");
    m.declared_genus_ = declared_genus;
  }
  if (oriented) {
    std::vector<int> reps;
    for (const auto& x : orientation) reps.push_back(dart(x));
    m = m.with_orientation_reps(reps);
    if (n == 0) m.oriented_empty_ = true;
  }
  return m;
}

void CombMap::validate() const {
  const int n = static_cast<int>(partner_.size());
  for (int d = 0; d < n; ++d) {
    int p = partner_[d];
    if (p < 0 || p >= n) throw StructuralError("unmatched dart");
    if (p == d || partner_[p] != d) throw StructuralError("dart matching is not an involution");
  }
}

void CombMap::index_ids() {
  std::vector<int> order(ids_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return ids_[a] < ids_[b]; });
  id_index_sorted_.clear();
  id_index_pos_.clear();
  for (int i : order) {
    if (!id_index_sorted_.empty() && id_index_sorted_.back() == ids_[i])
      throw StructuralError("duplicate crossing id");
    id_index_sorted_.push_back(ids_[i]);
    id_index_pos_.push_back(i);
  }
}

int CombMap::index_of(int id) const {
  auto it = std::lower_bound(id_index_sorted_.begin(), id_index_sorted_.end(), id);
  if (it == id_index_sorted_.end() || *it != id) throw StructuralError("unknown crossing id " + std::to_string(id));
  return id_index_pos_[it - id_index_sorted_.begin()];
}

bool CombMap::outgoing(int d) const {
  if (out_.empty()) throw StructuralError("diagram has no orientation");
  return out_[d] != 0;
}

CombMap CombMap::with_orientation(std::vector<std::uint8_t> out) const {
  const int n = dart_count();
  if (static_cast<int>(out.size()) != n) throw StructuralError("orientation size mismatch");
  for (int d = 0; d < n; ++d) {
    if ((out[d] != 0) == (out[partner_[d]] != 0)) throw StructuralError("edge orientation inconsistent");
    if ((out[d] != 0) == (out[rotate(d, 2)] != 0)) throw StructuralError("strand orientation inconsistent");
  }
  int k = 0;
  auto comp = component_ids(partner_, &k);
  std::vector<int> reps(k, -1);
  for (int d = 0; d < n; ++d)
    if (out[d] && reps[comp[d]] < 0) reps[comp[d]] = d;
  CombMap m = *this;
  m.out_ = std::move(out);
  m.reps_ = std::move(reps);
  m.oriented_empty_ = n == 0;
  return m;
}

CombMap CombMap::with_orientation_reps(const std::vector<int>& reps) const {
  const int n = dart_count();
  int k = 0;
  auto comp = component_ids(partner_, &k);
  std::vector<std::uint8_t> out(n, 0);
  std::vector<char> seen(k, 0);
  for (int r : reps) {
    if (r < 0 || r >= n) throw StructuralError("orientation dart out of range");
    if (seen[comp[r]]) throw StructuralError("component oriented twice");
    seen[comp[r]] = 1;
    int d = r;
    do {
      out[d] = 1;
      d = next_on_strand(*this, d);
    } while (d != r);
  }
  for (int c = 0; c < k; ++c)
    if (!seen[c]) throw StructuralError("component without orientation");
  CombMap m = *this;
  m.out_ = std::move(out);
  m.reps_ = reps;
  m.oriented_empty_ = n == 0;
  return m;
}

CombMap CombMap::without_orientation() const {
  CombMap m = *this;
  m.out_.clear();
  m.reps_.clear();
  m.oriented_empty_ = false;
  return m;
}

CombMap CombMap::with_default_orientation() const {
  int k = 0;
  auto comp = component_ids(partner_, &k);
  std::vector<int> reps(k, -1);
  for (int d = 0; d < dart_count(); ++d)
    if (reps[comp[d]] < 0) reps[comp[d]] = d;
  CombMap m = with_orientation_reps(reps);
  m.oriented_empty_ = true;
  return m;
}

CombMap CombMap::with_declared_genus(std::optional<int> g) const {
  CombMap m = *this;
  m.declared_genus_ = g;
  return m;
}

CombMap CombMap::with_ids(std::vector<int> ids) const {
  if (ids.size() != ids_.size()) throw StructuralError("crossing id count mismatch");
  CombMap m = *this;
  m.ids_ = std::move(ids);
  m.index_ids();
  return m;
}

CombMap CombMap::with_unknots(int k) const {
  if (k < 0) throw StructuralError("negative free loop count");
  CombMap m = *this;
  m.unknots_ = k;
  return m;
}

FaceStructure faces(const CombMap& m) {
  FaceStructure fs;
  const int n = m.dart_count();
  fs.face_of.assign(n, -1);
  for (int d0 = 0; d0 < n; ++d0) {
    if (fs.face_of[d0] >= 0) continue;
    std::vector<int> cycle;
    int d = d0;
    while (fs.face_of[d] < 0) {
      fs.face_of[d] = static_cast<int>(fs.faces.size());
      cycle.push_back(d);
      d = next_in_face(m, d);
    }
    if (d != d0) throw StructuralError("face permutation is not a permutation");
    fs.faces.push_back(std::move(cycle));
  }
  fs.free_loop_faces = 2 * m.unknots();
  return fs;
}

std::vector<std::vector<int>> connected_pieces(const CombMap& m) {
  const int n = m.size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> pieces;
  for (int c0 = 0; c0 < n; ++c0) {
    if (seen[c0]) continue;
    std::vector<int> piece{c0};
    seen[c0] = 1;
    for (std::size_t i = 0; i < piece.size(); ++i)
      for (int s = 0; s < 4; ++s) {
        int c = crossing_of(m.partner(dart_of(piece[i], s)));
        if (!seen[c]) {
          seen[c] = 1;
          piece.push_back(c);
        }
      }
    std::sort(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

std::vector<std::vector<int>> strand_components(const CombMap& m) {
  int k = 0;
  auto comp = component_ids(m.partners(), &k);
  std::vector<int> start(k, -1);
  if (m.oriented() && m.size() > 0) {
    for (int r : m.orientation_reps()) start[comp[r]] = r;
  } else {
    for (int d = 0; d < m.dart_count(); ++d)
      if (start[comp[d]] < 0) start[comp[d]] = d;
  }
  std::vector<std::vector<int>> out;
  for (int c = 0; c < k; ++c) {
    std::vector<int> cyc;
    int d = start[c];
    do {
      cyc.push_back(d);
      d = next_on_strand(m, d);
    } while (d != start[c]);
    out.push_back(std::move(cyc));
  }
  return out;
}

int component_count(const CombMap& m) {
  int k = 0;
  component_ids(m.partners(), &k);
  return k + m.unknots();
}

int genus(const CombMap& m) {
  auto fs = faces(m);
  auto pieces = connected_pieces(m);
  std::vector<int> piece_of(m.size());
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
    for (int c : pieces[i]) piece_of[c] = i;
  std::vector<int> f(pieces.size(), 0);
  for (const auto& face : fs.faces) ++f[piece_of[crossing_of(face[0])]];
  int total = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    int v = static_cast<int>(pieces[i].size());
    int twice = 2 + v - f[i];  // 2 - V + E - F with E = 2V
    if (twice < 0 || twice % 2 != 0) throw StructuralError("Euler characteristic gives non-integer genus");
    total += twice / 2;
  }
  return total;
}

bool is_alternating(const CombMap& m) {
  for (const auto& e : m.edges())
    if (((slot_of(e[0]) + slot_of(e[1])) & 1) == 0) return false;
  return true;
}

FaceStructure checkerboard_coloring(const CombMap& m) {
  FaceStructure fs = faces(m);
  const int f = static_cast<int>(fs.faces.size());
  std::vector<int> color(f, -1);
  for (int f0 = 0; f0 < f; ++f0) {
    if (color[f0] >= 0) continue;
    color[f0] = 0;
    std::deque<int> queue{f0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int d : fs.faces[x]) {
        int y = fs.face_of[m.partner(d)];
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          throw NotColorable("faces on both sides of an edge share a color");
        }
      }
    }
  }
  fs.coloring = std::move(color);
  return fs;
}

bool is_colorable(const CombMap& m) {
  try {
    checkerboard_coloring(m);
    return true;
  } catch (const NotColorable&) {
    return false;
  }
}

int crossing_sign(const CombMap& m, int c) {
  int so = m.outgoing(dart_of(c, 0)) ? 1 : -1;
  int su = m.outgoing(dart_of(c, 1)) ? 1 : -1;
  return so * su;
}

int writhe(const CombMap& m) {
  if (!m.oriented()) throw StructuralError("writhe needs an oriented diagram");
  int w = 0;
  for (int c = 0; c < m.size(); ++c) w += crossing_sign(m, c);
  return w;
}

namespace {

// Relabels slots by s -> a*s + b (mod 4), a = +-1, keeping crossing order.
CombMap reslot(const CombMap& m, int a, int b) {
  auto map_dart = [&](int d) { return dart_of(crossing_of(d), a * slot_of(d) + b + 4); };
  const int n = m.dart_count();
  std::vector<int> partner(n);
  for (int d = 0; d < n; ++d) partner[map_dart(d)] = map_dart(m.partner(d));
  std::vector<std::array<Dart, 2>> edges;
  for (const auto& e : m.edges()) {
    int x = map_dart(e[0]), y = map_dart(e[1]);
    edges.push_back({Dart{m.id(crossing_of(x)), slot_of(x)}, Dart{m.id(crossing_of(y)), slot_of(y)}});
  }
  std::vector<Dart> orient;
  for (int r : m.orientation_reps()) {
    int x = map_dart(r);
    orient.push_back({m.id(crossing_of(x)), slot_of(x)});
  }
  return CombMap::from_edges(m.ids(), edges, orient, m.oriented(), m.unknots(), m.declared_genus());
}

}  // namespace

CombMap mirror(const CombMap& m) { return reslot(m, 1, 1); }
CombMap reflect(const CombMap& m) { return reslot(m, -1, 0); }

CombMap reverse_strands(const CombMap& m) {
  if (!m.oriented()) return m;
  auto out = m.out_flags();
  for (auto& x : out) x = !x;
  CombMap r = m.with_orientation(std::move(out));
  return r;
}

std::vector<std::uint16_t> rooted_code(const CombMap& m, int start, bool refl, bool mir,
                                       bool with_orientation, bool shadow, std::vector<int>* label,
                                       std::vector<int>* entry) {
  const int n = m.size();
  const int dir = refl ? -1 : 1;
  std::vector<int> lab(n, -1), ent(n, -1), order;
  order.reserve(n);
  auto t0_of = [&](int j) { return shadow ? 0 : ((j + (mir ? 1 : 0)) & 1); };
  auto visit = [&](int d) {
    int c = crossing_of(d);
    lab[c] = static_cast<int>(order.size());
    ent[c] = slot_of(d);
    order.push_back(c);
  };
  visit(start);
  std::vector<std::uint16_t> code;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int c = order[i];
    int j = ent[c], t0 = t0_of(j);
    for (int t = 0; t < 4; ++t) {
      int d = dart_of(c, j + dir * (t - t0) + 8);
      int p = m.partner(d);
      int pc = crossing_of(p);
      if (lab[pc] < 0) visit(p);
      int pt = t0_of(ent[pc]) + dir * (slot_of(p) - ent[pc]);
      pt = ((pt % 4) + 4) % 4;
      int v = lab[pc] * 4 + pt;
      if (with_orientation) v = v * 2 + (m.outgoing(d) ? 1 : 0);
      code.push_back(static_cast<std::uint16_t>(v));
    }
  }
  if (label) *label = std::move(lab);
  if (entry) *entry = std::move(ent);
  return code;
}

namespace {

struct PieceCode {
  std::vector<std::uint16_t> code;
  int start = -1;
  bool refl = false, mir = false;
};

PieceCode best_code(const CombMap& m, const std::vector<int>& piece, const IsoFlags& flags) {
  const bool orient = m.oriented() && !flags.ignore_link_orientation;
  PieceCode best;
  for (int r = 0; r <= (flags.allow_reflection ? 1 : 0); ++r)
    for (int mi = 0; mi <= (flags.allow_mirror ? 1 : 0); ++mi)
      for (int c : piece)
        for (int s = 0; s < 4; ++s) {
          auto code = rooted_code(m, dart_of(c, s), r, mi, orient, false);
          if (best.start < 0 || code < best.code) best = {std::move(code), dart_of(c, s), r != 0, mi != 0};
        }
  return best;
}

std::string render(const std::vector<std::uint16_t>& code) {
  std::string s;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(code[i]);
  }
  return s;
}

}  // namespace

std::string canonical_form(const CombMap& m, const IsoFlags& flags) {
  std::vector<std::vector<std::uint16_t>> codes;
  for (const auto& piece : connected_pieces(m)) codes.push_back(best_code(m, piece, flags).code);
  std::sort(codes.begin(), codes.end());
  std::string s = "U" + std::to_string(m.unknots());
  if (m.declared_genus()) s += "G" + std::to_string(*m.declared_genus());
  if (m.oriented() && !flags.ignore_link_orientation) s += "o";
  for (const auto& c : codes) s += "|" + render(c);
  return s;
}

std::optional<DiagramIso> isomorphic(const CombMap& a, const CombMap& b, const IsoFlags& flags) {
  if (a.size() != b.size() || a.unknots() != b.unknots() || a.declared_genus() != b.declared_genus())
    return std::nullopt;
  if (!flags.ignore_link_orientation && a.oriented() != b.oriented()) return std::nullopt;
  auto collect = [&](const CombMap& m) {
    std::vector<PieceCode> out;
    for (const auto& piece : connected_pieces(m)) out.push_back(best_code(m, piece, flags));
    std::sort(out.begin(), out.end(), [](const PieceCode& x, const PieceCode& y) { return x.code < y.code; });
    return out;
  };
  auto pa = collect(a), pb = collect(b);
  if (pa.size() != pb.size()) return std::nullopt;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i].code != pb[i].code) return std::nullopt;
  DiagramIso iso;
  iso.crossing_map.assign(a.size(), -1);
  iso.dart_map.assign(a.dart_count(), -1);
  const bool orient = a.oriented() && !flags.ignore_link_orientation;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    std::vector<int> la, ea, lb, eb;
    rooted_code(a, pa[i].start, pa[i].refl, pa[i].mir, orient, false, &la, &ea);
    rooted_code(b, pb[i].start, pb[i].refl, pb[i].mir, orient, false, &lb, &eb);
    std::vector<int> by_label(b.size(), -1);
    for (int c = 0; c < b.size(); ++c)
      if (lb[c] >= 0) by_label[lb[c]] = c;
    const int da = pa[i].refl ? -1 : 1, db = pb[i].refl ? -1 : 1;
    for (int c = 0; c < a.size(); ++c) {
      if (la[c] < 0) continue;
      int cb = by_label[la[c]];
      iso.crossing_map[c] = cb;
      int t0a = (ea[c] + (pa[i].mir ? 1 : 0)) & 1;
      int t0b = (eb[cb] + (pb[i].mir ? 1 : 0)) & 1;
      for (int s = 0; s < 4; ++s) {
        int t = t0a + da * (s - ea[c]);
        int sb = eb[cb] + db * (t - t0b);
        iso.dart_map[dart_of(c, s)] = dart_of(cb, ((sb % 4) + 4) % 4);
      }
    }
    iso.reflection = pa[i].refl != pb[i].refl;
    iso.mirror = pa[i].mir != pb[i].mir;
  }
  return iso;
}

bool check_iso(const CombMap& a, const CombMap& b, const DiagramIso& iso, const IsoFlags& flags) {
  if (a.size() != b.size()) return false;
  if (iso.reflection && !flags.allow_reflection) return false;
  if (iso.mirror && !flags.allow_mirror) return false;
  const int dir = iso.reflection ? -1 : 1;
  for (int d = 0; d < a.dart_count(); ++d) {
    int e = iso.dart_map[d];
    if (e < 0 || crossing_of(e) != iso.crossing_map[crossing_of(d)]) return false;
    if (iso.dart_map[a.partner(d)] != b.partner(e)) return false;
    int nd = iso.dart_map[rotate(d, 1)];
    if (nd != rotate(e, dir)) return false;
    bool over_a = (slot_of(d) & 1) == 0, over_b = (slot_of(e) & 1) == 0;
    if ((over_a != over_b) != iso.mirror) return false;
    if (a.oriented() && b.oriented() && !flags.ignore_link_orientation && a.outgoing(d) != b.outgoing(e))
      return false;
  }
  return true;
}

std::string to_json(const CombMap& m) {
  nlohmann::json j;
  j["crossings"] = nlohmann::json::array();
  for (int id : m.ids()) j["crossings"].push_back({{"id", id}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : m.edges())
    j["edges"].push_back({{m.id(crossing_of(e[0])), slot_of(e[0])}, {m.id(crossing_of(e[1])), slot_of(e[1])}});
  if (m.declared_genus()) j["genus"] = *m.declared_genus();
  if (m.oriented()) {
    j["orientation"] = nlohmann::json::array();
    for (int r : m.orientation_reps()) j["orientation"].push_back({m.id(crossing_of(r)), slot_of(r)});
  }
  if (m.unknots() > 0) j["unknots"] = m.unknots();
  return j.dump();
}

CombMap from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw StructuralError("diagram must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& k = it.key();
      if (k != "crossings" && k != "edges" && k != "genus" && k != "orientation" && k != "unknots")
        throw StructuralError("unknown key " + k);
    }
    std::vector<int> ids;
    for (const auto& c : j.at("crossings")) ids.push_back(c.at("id").get<int>());
    auto dart = [](const nlohmann::json& x) {
      if (!x.is_array() || x.size() != 2) throw StructuralError("dart must be [crossing, slot]");
      return Dart{x[0].get<int>(), x[1].get<int>()};
    };
    std::vector<std::array<Dart, 2>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw StructuralError("edge must be a pair of darts");
      edges.push_back({dart(e[0]), dart(e[1])});
    }
    std::vector<Dart> orient;
    bool oriented = j.contains("orientation");
    if (oriented)
      for (const auto& x : j["orientation"]) orient.push_back(dart(x));
    int unknots = j.contains("unknots") ? j["unknots"].get<int>() : 0;
    std::optional<int> g;
    if (j.contains("genus")) g = j["genus"].get<int>();
    return CombMap::from_edges(std::move(ids), edges, orient, oriented, unknots, g);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("malformed diagram: ") + e.what());
  }
}

}  // namespace surface_links
