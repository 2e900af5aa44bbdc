#include "surface_links/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "map_builder.hpp"

namespace surface_links {

int GaussCode::crossing_count() const {
  int n = 0;
  for (const auto& c : components) n += static_cast<int>(c.size());
  return n / 2;
}

GaussCode parse_gauss(const std::string& text) {
  GaussCode code;
  std::vector<GaussToken> current;
  bool any = false;
  std::size_t i = 0;
  auto close_component = [&]() {
    if (current.empty()) throw GaussSyntaxError("empty component in Gauss code");
    code.components.push_back(std::move(current));
    current.clear();
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
    } else if (ch == '/') {
      close_component();
      ++i;
    } else if (ch == 'O' || ch == 'U') {
      GaussToken t;
      t.over = ch == 'O';
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw GaussSyntaxError("missing crossing label at position " + std::to_string(start));
      if (i - start > 9) throw GaussSyntaxError("crossing label too long");
      t.label = std::stoi(text.substr(start, i - start));
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw GaussSyntaxError("missing sign at position " + std::to_string(i));
      t.sign = text[i] == '+' ? 1 : -1;
      ++i;
      if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',' && text[i] != '/')
        throw GaussSyntaxError("unexpected character after token at position " + std::to_string(i));
      current.push_back(t);
      any = true;
    } else {
      throw GaussSyntaxError(std::string("unexpected character '") + ch + "' at position " + std::to_string(i));
    }
  }
  if (!any) throw GaussSyntaxError("empty Gauss code");
  close_component();
  validate(code);
  return code;
}

void validate(const GaussCode& code) {
  struct Seen {
    int over = 0, under = 0, sign = 0;
  };
  std::map<int, Seen> seen;
  for (const auto& comp : code.components)
    for (const auto& t : comp) {
      if (t.sign != 1 && t.sign != -1) throw GaussSyntaxError("sign must be +1 or -1");
      if (t.label < 0) throw GaussSyntaxError("negative crossing label");
      auto& s = seen[t.label];
      (t.over ? s.over : s.under)++;
      if (s.sign != 0 && s.sign != t.sign) throw GaussSyntaxError("sign mismatch at crossing " + std::to_string(t.label));
      s.sign = t.sign;
    }
  for (const auto& [label, s] : seen) {
    if (s.over + s.under != 2) throw GaussSyntaxError("crossing " + std::to_string(label) + " does not occur exactly twice");
    if (s.over != 1) throw GaussSyntaxError("crossing " + std::to_string(label) + " needs one O and one U");
  }
}

std::string to_string(const GaussCode& code) {
  std::string s;
  for (std::size_t c = 0; c < code.components.size(); ++c) {
    if (c) s += " / ";
    for (std::size_t i = 0; i < code.components[c].size(); ++i) {
      const auto& t = code.components[c][i];
      if (i) s += ' ';
      s += t.over ? 'O' : 'U';
      s += std::to_string(t.label);
      s += t.sign > 0 ? '+' : '-';
    }
  }
  return s;
}

CombMap gauss_to_surface(const GaussCode& code) {
  validate(code);
  std::vector<int> labels;
  for (const auto& comp : code.components)
    for (const auto& t : comp) labels.push_back(t.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto index = [&](int label) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin()); };
  const int n = static_cast<int>(labels.size());
  std::vector<int> partner(4 * n, -1);
  std::vector<std::uint8_t> out(4 * n, 0);
  int unknots = 0;
  auto entry = [&](const GaussToken& t) {
    int c = index(t.label);
    if (t.over) return dart_of(c, 2);
    return dart_of(c, t.sign > 0 ? 3 : 1);
  };
  for (const auto& comp : code.components) {
    if (comp.empty()) {
      ++unknots;
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) {
      int exit = rotate(entry(comp[i]), 2);
      int next = entry(comp[(i + 1) % comp.size()]);
      partner[exit] = next;
      partner[next] = exit;
      out[exit] = 1;
    }
  }
  return CombMap::from_partner(std::move(partner), labels, unknots).with_orientation(std::move(out));
}

GaussCode gauss_of_map(const CombMap& m0) {
  CombMap m = m0.oriented() ? m0 : m0.with_default_orientation();
  GaussCode code;
  for (const auto& cyc : strand_components(m)) {
    std::vector<GaussToken> comp;
    for (int d : cyc) {
      int c = crossing_of(d);
      comp.push_back({(slot_of(d) & 1) == 0, m.id(c), crossing_sign(m, c)});
    }
    code.components.push_back(std::move(comp));
  }
  for (int i = 0; i < m.unknots(); ++i) code.components.emplace_back();
  return code;
}

int VirtualDiagram::virtual_count() const {
  return static_cast<int>(std::count(is_virtual.begin(), is_virtual.end(), 1));
}

void validate(const VirtualDiagram& v) {
  if (static_cast<int>(v.is_virtual.size()) != v.graph.size()) throw StructuralError("vertex type list size mismatch");
  if (!v.graph.oriented()) throw StructuralError("virtual diagram must be oriented");
  if (genus(v.graph) != 0) throw StructuralError("virtual diagram graph is not planar");
}

namespace {

struct Point {
  std::int64_t x, y;
};

std::int64_t cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

// Position along the boundary of a tree neighbourhood: darts of the piece not
// in the tree, listed with the complement on the left.
std::vector<int> boundary_walk(const CombMap& m, int root, const std::vector<char>& tree) {
  std::vector<int> stubs;
  const int start = dart_of(root, 0);
  int e = start;
  do {
    int cand = rotate(e, 3);
    if (tree[cand]) {
      e = m.partner(cand);
    } else {
      stubs.push_back(cand);
      e = cand;
    }
  } while (e != start);
  return stubs;
}

std::vector<char> spanning_tree(const CombMap& m, const std::vector<int>& piece, const std::vector<char>& allowed) {
  std::vector<char> tree(m.dart_count(), 0);
  std::vector<char> seen(m.size(), 0);
  std::vector<int> queue{piece[0]};
  seen[piece[0]] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int s = 0; s < 4; ++s) {
      int d = dart_of(queue[i], s);
      if (!allowed.empty() && !allowed[d]) continue;
      int c = crossing_of(m.partner(d));
      if (!seen[c]) {
        seen[c] = 1;
        tree[d] = tree[m.partner(d)] = 1;
        queue.push_back(c);
      }
    }
  return tree;
}

}  // namespace

VirtualDiagram surface_to_virtual(const CombMap& m0) {
  CombMap m = m0.oriented() ? m0 : m0.with_default_orientation();
  detail::MapBuilder b(m);
  int next_id = b.fresh_id();
  for (const auto& piece : connected_pieces(m)) {
    auto tree = spanning_tree(m, piece, {});
    auto stubs = boundary_walk(m, piece[0], tree);
    const int k = static_cast<int>(stubs.size());
    std::vector<int> pos(m.dart_count(), -1);
    for (int i = 0; i < k; ++i) pos[stubs[i]] = i;
    std::vector<Point> pt(k);
    for (int i = 0; i < k; ++i) pt[i] = {i, static_cast<std::int64_t>(i) * i};
    struct Chord {
      int from, to;  // darts
    };
    std::vector<Chord> chords;
    for (int d : stubs)
      if (pos[d] < pos[m.partner(d)]) chords.push_back({d, m.partner(d)});
    struct Hit {
      std::int64_t num, den;  // parameter along the chord
      int vertex;
      int in_slot, out_slot;
    };
    std::vector<std::vector<Hit>> hits(chords.size());
    auto inside = [](int a, int b, int x) { return a < x && x < b; };
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        int a1 = pos[chords[i].from], a2 = pos[chords[i].to];
        int b1 = pos[chords[j].from], b2 = pos[chords[j].to];
        int lo = std::min(a1, a2), hi = std::max(a1, a2);
        if (inside(lo, hi, b1) == inside(lo, hi, b2)) continue;
        Point A1 = pt[a1], A2 = pt[a2], B1 = pt[b1], B2 = pt[b2];
        Point da = sub(A2, A1), db = sub(B2, B1);
        std::int64_t den = cross(da, db);
        std::int64_t ta = cross(sub(B1, A1), db), tb = cross(sub(B1, A1), da);
        int v = b.add_crossing(next_id++);
        bool ccw = den > 0;
        // slots: A forward 0, A backward 2; B forward 1 when it lies counterclockwise of A forward
        int b_fwd = ccw ? 1 : 3, b_bwd = ccw ? 3 : 1;
        if (den < 0) {
          den = -den;
          ta = -ta;
          tb = -tb;
        }
        hits[i].push_back({ta, den, v, 2, 0});
        hits[j].push_back({tb, den, v, b_bwd, b_fwd});
      }
    for (std::size_t i = 0; i < chords.size(); ++i) {
      auto& h = hits[i];
      std::sort(h.begin(), h.end(), [](const Hit& x, const Hit& y) { return x.num * y.den < y.num * x.den; });
      int prev = chords[i].from;
      for (const auto& x : h) {
        b.link(prev, dart_of(x.vertex, x.in_slot));
        prev = dart_of(x.vertex, x.out_slot);
      }
      b.link(prev, chords[i].to);
    }
  }
  VirtualDiagram v;
  v.graph = b.build();
  v.is_virtual.assign(v.graph.size(), 1);
  for (int c = 0; c < m.size(); ++c) v.is_virtual[c] = 0;
  return v;
}

GaussCode gauss_of(const VirtualDiagram& v) {
  GaussCode code;
  const CombMap& g = v.graph;
  for (const auto& cyc : strand_components(g)) {
    std::vector<GaussToken> comp;
    for (int d : cyc) {
      int c = crossing_of(d);
      if (v.is_virtual[c]) continue;
      comp.push_back({(slot_of(d) & 1) == 0, g.id(c), crossing_sign(g, c)});
    }
    code.components.push_back(std::move(comp));
  }
  for (int i = 0; i < g.unknots(); ++i) code.components.emplace_back();
  return code;
}

VirtualDiagram virtual_r2(const VirtualDiagram& v, int d1, int d2) {
  detail::MapBuilder b(v.graph);
  auto fs = faces(v.graph);
  int id = b.fresh_id();
  detail::insert_bigon(b, fs, d1, d2, true, id, id + 1);
  VirtualDiagram out;
  out.graph = b.build();
  out.is_virtual = v.is_virtual;
  out.is_virtual.push_back(1);
  out.is_virtual.push_back(1);
  return out;
}

namespace {

// Lexicographically least length-prefixed encoding over component orders and
// rotations, with labels renumbered by first occurrence.
std::vector<int> minimal_encoding(const GaussCode& code, bool shadow) {
  std::vector<int> labels;
  for (const auto& comp : code.components)
    for (const auto& t : comp) labels.push_back(t.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const int n = static_cast<int>(labels.size());
  const int k = static_cast<int>(code.components.size());
  std::vector<std::vector<int>> idx(k);
  for (int c = 0; c < k; ++c)
    for (const auto& t : code.components[c])
      idx[c].push_back(static_cast<int>(std::lower_bound(labels.begin(), labels.end(), t.label) - labels.begin()));

  struct State {
    std::vector<int> relabel;
    std::vector<char> used;
    int next = 0;
    std::vector<std::pair<int, int>> picks;  // component, rotation
    bool operator<(const State& o) const { return std::tie(relabel, used) < std::tie(o.relabel, o.used); }
  };
  std::vector<State> states{State{std::vector<int>(n, -1), std::vector<char>(k, 0), 0, {}}};
  std::vector<int> result;
  for (int step = 0; step < k; ++step) {
    std::vector<int> best;
    std::vector<State> next_states;
    for (const auto& st : states)
      for (int c = 0; c < k; ++c) {
        if (st.used[c]) continue;
        const auto& comp = code.components[c];
        const int len = static_cast<int>(comp.size());
        for (int r = 0; r < std::max(len, 1); ++r) {
          State ns = st;
          ns.used[c] = 1;
          ns.picks.push_back({c, r});
          std::vector<int> enc{len};
          for (int t = 0; t < len; ++t) {
            int i = (r + t) % len;
            int& l = ns.relabel[idx[c][i]];
            if (l < 0) l = ns.next++;
            enc.push_back(shadow ? l : l * 4 + (comp[i].over ? 0 : 2) + (comp[i].sign > 0 ? 0 : 1));
          }
          if (next_states.empty() || enc < best) {
            best = enc;
            next_states.clear();
            next_states.push_back(std::move(ns));
          } else if (enc == best) {
            next_states.push_back(std::move(ns));
          }
        }
      }
    std::sort(next_states.begin(), next_states.end());
    next_states.erase(std::unique(next_states.begin(), next_states.end(),
                                  [](const State& x, const State& y) { return !(x < y) && !(y < x); }),
                      next_states.end());
    states = std::move(next_states);
    result.insert(result.end(), best.begin(), best.end());
  }
  return result;
}

}  // namespace

std::string canonical_gauss(const GaussCode& code) {
  validate(code);
  const auto result = minimal_encoding(code, false);
  const int k = static_cast<int>(code.components.size());
  // render the minimal code with labels 1..n
  std::string s;
  std::size_t p = 0;
  for (int step = 0; step < k; ++step) {
    if (step) s += " / ";
    int len = result[p++];
    if (len == 0) s += "()";
    for (int t = 0; t < len; ++t) {
      int v = result[p++];
      if (t) s += ' ';
      s += (v & 2) ? 'U' : 'O';
      s += std::to_string(v / 4 + 1);
      s += (v & 1) ? '-' : '+';
    }
  }
  return s;
}

std::string canonical_shadow(const GaussCode& code) {
  std::string s;
  for (int v : minimal_encoding(code, true)) s += std::to_string(v) + ',';
  return s;
}

std::optional<Lasso> find_lasso(const VirtualDiagram& v) {
  const CombMap& g = v.graph;
  std::vector<char> allowed(g.dart_count(), 0);
  for (int d = 0; d < g.dart_count(); ++d)
    allowed[d] = !v.is_virtual[crossing_of(d)] && !v.is_virtual[crossing_of(g.partner(d))];
  Lasso lasso;
  for (const auto& piece : connected_pieces(g)) {
    std::vector<int> classical;
    for (int c : piece)
      if (!v.is_virtual[c]) classical.push_back(c);
    if (classical.empty()) continue;
    auto tree = spanning_tree(g, classical, allowed);
    std::vector<char> reached(g.size(), 0);
    reached[classical[0]] = 1;
    for (int d = 0; d < g.dart_count(); ++d)
      if (tree[d]) reached[crossing_of(d)] = 1;
    for (int c : classical)
      if (!reached[c]) return std::nullopt;
    lasso.vertices.insert(lasso.vertices.end(), classical.begin(), classical.end());
    for (int d = 0; d < g.dart_count(); ++d)
      if (tree[d] && d < g.partner(d)) lasso.core.push_back({d, g.partner(d)});
    auto walk = boundary_walk(g, classical[0], tree);
    lasso.boundary.insert(lasso.boundary.end(), walk.begin(), walk.end());
  }
  std::sort(lasso.vertices.begin(), lasso.vertices.end());
  return lasso;
}

GaussCode connect_sum(const GaussCode& a, const GaussCode& b, Site sa, Site sb) {
  validate(a);
  validate(b);
  auto check = [](const GaussCode& c, Site s, const char* which) {
    if (s.component < 0 || s.component >= static_cast<int>(c.components.size()))
      throw std::invalid_argument(std::string("invalid site: no component in ") + which);
    int len = static_cast<int>(c.components[s.component].size());
    if (s.edge < 0 || s.edge >= std::max(len, 1)) throw std::invalid_argument(std::string("invalid site: no such edge in ") + which);
  };
  check(a, sa, "first code");
  check(b, sb, "second code");
  int offset = 0;
  for (const auto& comp : a.components)
    for (const auto& t : comp) offset = std::max(offset, t.label);
  auto shifted = [&](GaussToken t) {
    t.label += offset;
    return t;
  };
  const auto& ca = a.components[sa.component];
  const auto& cb = b.components[sb.component];
  std::vector<GaussToken> spliced;
  const int la = static_cast<int>(ca.size()), lb = static_cast<int>(cb.size());
  for (int i = 0; i <= sa.edge && i < la; ++i) spliced.push_back(ca[i]);
  for (int t = 0; t < lb; ++t) spliced.push_back(shifted(cb[(sb.edge + 1 + t) % lb]));
  for (int i = sa.edge + 1; i < la; ++i) spliced.push_back(ca[i]);
  GaussCode out;
  for (int c = 0; c < static_cast<int>(a.components.size()); ++c)
    out.components.push_back(c == sa.component ? spliced : a.components[c]);
  for (int c = 0; c < static_cast<int>(b.components.size()); ++c) {
    if (c == sb.component) continue;
    std::vector<GaussToken> comp;
    for (const auto& t : b.components[c]) comp.push_back(shifted(t));
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace surface_links
