#include "surface_links/goeritz.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace surface_links {

std::string to_string(Color c) { return c == Color::B ? "B" : "W"; }
Color other(Color c) { return c == Color::B ? Color::W : Color::B; }

Checkerboard checkerboard(const CombMap& m) {
  Checkerboard cb;
  cb.faces = checkerboard_coloring(m);
  const auto& coloring = *cb.faces.coloring;
  cb.labels.assign(cb.faces.faces.size(), Color::B);
  for (const auto& piece : connected_pieces(m)) {
    bool alternating = true;
    std::vector<int> cls[2];
    for (int c : piece) {
      for (int s = 0; s < 4; ++s) {
        int d = dart_of(c, s);
        if (((slot_of(m.partner(d)) ^ s) & 1) == 0) alternating = false;
        cls[coloring[cb.faces.face_of[d]]].push_back(cb.faces.face_of[d]);
      }
    }
    int black;
    if (alternating) {
      black = coloring[cb.faces.face_of[dart_of(piece.front(), 0)]];
    } else {
      for (auto& v : cls) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      }
      black = cls[0] <= cls[1] ? 0 : 1;
    }
    for (int c : piece)
      for (int s = 0; s < 4; ++s) {
        int f = cb.faces.face_of[dart_of(c, s)];
        cb.labels[f] = coloring[f] == black ? Color::B : Color::W;
      }
  }
  return cb;
}

Spine spine(const CombMap& m, Color color) {
  Checkerboard cb = checkerboard(m);
  const auto& fs = cb.faces;
  const int nf = static_cast<int>(fs.faces.size());
  Spine sp;
  sp.color = color;
  for (int f = 0; f < nf; ++f)
    if (cb.labels[f] == color) sp.vertices.push_back(f);
  for (int c = 0; c < m.size(); ++c) sp.edges.push_back(c);

  // Parent passage of each face: entering corner lies in the parent face.
  std::vector<int> parent(nf, -1);
  std::vector<Passage> via(nf);
  std::vector<char> seen(nf, 0), tree_edge(m.size(), 0);
  for (int root : sp.vertices) {
    if (seen[root]) continue;
    ++sp.components;
    seen[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int d : fs.faces[f]) {
        int c = crossing_of(d), k = slot_of(d);
        int g = fs.face_of[dart_of(c, k + 2)];
        if (seen[g] || tree_edge[c]) continue;
        seen[g] = 1;
        tree_edge[c] = 1;
        parent[g] = f;
        via[g] = Passage{c, k};
        queue.push_back(g);
      }
    }
  }
  sp.beta1 = m.size() - static_cast<int>(sp.vertices.size()) + sp.components;

  auto path_to_root = [&](int f) {
    std::vector<int> path{f};
    while (parent[path.back()] >= 0) path.push_back(parent[path.back()]);
    return path;
  };
  for (int c = 0; c < m.size(); ++c) {
    if (tree_edge[c]) continue;
    int p = cb.parity(color, c);
    int u = fs.face_of[dart_of(c, p)], v = fs.face_of[dart_of(c, p + 2)];
    auto pu = path_to_root(u), pv = path_to_root(v);
    while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
      pu.pop_back();
      pv.pop_back();
    }
    std::vector<Passage> loop{Passage{c, p}};
    for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
      Passage down = via[pv[i]];
      loop.push_back(Passage{down.crossing, (down.corner + 2) & 3});
    }
    for (std::size_t i = pu.size() - 1; i-- > 0;) loop.push_back(via[pu[i]]);
    sp.basis.push_back(SpineCurve{{loop}});
  }
  return sp;
}

std::vector<int> coefficients(const CombMap& m, Color color, const SpineCurve& a) {
  Checkerboard cb = checkerboard(m);
  std::vector<int> coef(m.size(), 0);
  for (const auto& loop : a.loops)
    for (const auto& p : loop) {
      int par = cb.parity(color, p.crossing);
      if (((p.corner ^ par) & 1) != 0) throw std::invalid_argument("passage through a corner of the other color");
      coef[p.crossing] += ((p.corner & 3) == ((par + 2) & 3)) ? 1 : -1;
    }
  return coef;
}

SpineCurve add(const SpineCurve& a, const SpineCurve& b) {
  SpineCurve r = a;
  r.loops.insert(r.loops.end(), b.loops.begin(), b.loops.end());
  return r;
}

namespace {

void check_cycle(const CombMap& m, const Checkerboard& cb, Color color, const SpineCurve& a) {
  for (const auto& loop : a.loops) {
    if (loop.empty()) throw std::invalid_argument("empty loop");
    for (std::size_t i = 0; i < loop.size(); ++i) {
      const auto& p = loop[i];
      const auto& q = loop[(i + 1) % loop.size()];
      if (p.crossing < 0 || p.crossing >= m.size() || p.corner < 0 || p.corner > 3)
        throw std::invalid_argument("passage out of range");
      if (cb.corner_color(p.crossing, p.corner) != color)
        throw std::invalid_argument("passage through a corner of the other color");
      if (cb.faces.face_of[dart_of(p.crossing, p.corner + 2)] != cb.faces.face_of[dart_of(q.crossing, q.corner)])
        throw std::invalid_argument("loop does not close up in the spine");
    }
  }
}

int passage_sign(const Checkerboard& cb, Color color, const Passage& p) {
  return (p.corner & 3) == ((cb.parity(color, p.crossing) + 2) & 3) ? 1 : -1;
}

Realization realize(const CombMap& m, const Checkerboard& cb, Color color, const std::vector<SpineCurve>& groups) {
  for (const auto& g : groups) check_cycle(m, cb, color, g);
  struct LoopRef {
    int group;
    const std::vector<Passage>* passages;
  };
  std::vector<LoopRef> loops;
  Realization r;
  r.curve_of_group.resize(groups.size());
  r.pushoff_of_group.resize(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (const auto& loop : groups[g].loops) {
      r.curve_of_group[g].push_back(static_cast<int>(loops.size()));
      loops.push_back({static_cast<int>(g), &loop});
    }
  const int k = static_cast<int>(loops.size());
  auto& curves = r.diagram.curves;
  for (int l = 0; l < k; ++l) {
    Curve cv;
    cv.name = "a" + std::to_string(l);
    for (const auto& p : *loops[l].passages)
      cv.steps.push_back({CurveStep::Kind::Band, p.crossing, p.corner, (p.corner + 2) & 3});
    curves.push_back(std::move(cv));
  }
  // Pushoff copies: [top copy on even chords, top copy on odd chords].
  std::vector<std::array<int, 2>> copies(k);
  for (int l = 0; l < k; ++l) {
    const int len = static_cast<int>(loops[l].passages->size());
    int first = static_cast<int>(curves.size());
    curves.push_back(Curve{"t" + std::to_string(l), curves[l].steps});
    copies[l] = {first, first};
    if (len % 2 == 0) {
      curves.push_back(Curve{"t" + std::to_string(l) + "'", curves[l].steps});
      copies[l][1] = first + 1;
    }
    r.pushoff_of_group[loops[l].group].insert(r.pushoff_of_group[loops[l].group].end(), copies[l].begin(),
                                              copies[l][0] == copies[l][1] ? copies[l].begin() + 1
                                                                           : copies[l].end());
  }

  // Heights: order of passages through each band.
  std::vector<std::vector<std::pair<int, int>>> at_band(m.size());
  std::vector<std::vector<int>> height(k);
  for (int l = 0; l < k; ++l) {
    const auto& ps = *loops[l].passages;
    height[l].resize(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) {
      height[l][i] = static_cast<int>(at_band[ps[i].crossing].size());
      at_band[ps[i].crossing].push_back({l, static_cast<int>(i)});
    }
  }
  std::size_t span = 1;
  for (const auto& b : at_band) span = std::max(span, b.size() + 1);

  auto& pts = r.diagram.points;
  auto add_pushoff_points = [&](int l, int chord_or_band, bool band, int other, int sign, bool above) {
    // Points of the pushoff copies of loop l against loop `other`.
    if (band) {
      for (int copy : {copies[l][0], copies[l][1]})
        pts.push_back({copy, other, sign, above ? Over::First : Over::Second});
      return;
    }
    int top = copies[l][chord_or_band & 1], bottom = copies[l][(chord_or_band + 1) & 1];
    pts.push_back({top, other, sign, Over::First});
    pts.push_back({bottom, other, sign, Over::Second});
  };

  // Band points.
  for (int c = 0; c < m.size(); ++c) {
    const auto& list = at_band[c];
    int e = cb.eta(color, c);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        auto [lp, ip] = list[i];
        auto [lq, iq] = list[j];
        int sp = passage_sign(cb, color, (*loops[lp].passages)[ip]);
        int sq = passage_sign(cb, color, (*loops[lq].passages)[iq]);
        // q is higher; sign(d_p x d_q) = -eta sp sq
        int s = -e * sp * sq;
        pts.push_back({lp, lq, s, Over::Second});
        if (lp != lq) {
          add_pushoff_points(lp, ip, true, lq, s, false);
          add_pushoff_points(lq, iq, true, lp, -s, true);
        }
      }
  }

  // Face points: chord i of loop l runs from the exit of passage i to the
  // entry of passage i+1.
  struct Chord {
    int loop, index;
    long long from, to;
  };
  std::map<int, std::vector<Chord>> in_face;
  std::vector<int> index_in_face(m.dart_count(), 0);
  for (const auto& f : cb.faces.faces)
    for (std::size_t i = 0; i < f.size(); ++i) index_in_face[f[i]] = static_cast<int>(i);
  auto position = [&](int c, int corner, int h) {
    int d = dart_of(c, corner);
    long long offset = (corner & 1) == 0 ? h : static_cast<long long>(span) - 1 - h;
    return static_cast<long long>(index_in_face[d]) * static_cast<long long>(span) + offset;
  };
  for (int l = 0; l < k; ++l) {
    const auto& ps = *loops[l].passages;
    const int len = static_cast<int>(ps.size());
    for (int i = 0; i < len; ++i) {
      const auto& p = ps[i];
      const auto& q = ps[(i + 1) % len];
      int f = cb.faces.face_of[dart_of(p.crossing, p.corner + 2)];
      in_face[f].push_back(
          {l, i, position(p.crossing, p.corner + 2, height[l][i]), position(q.crossing, q.corner, height[l][(i + 1) % len])});
    }
  }
  for (const auto& [f, chords] : in_face)
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        const auto& x = chords[i];
        const auto& y = chords[j];
        int s = chord_crossing(x.from, x.to, y.from, y.to);
        if (s == 0) continue;
        pts.push_back({x.loop, y.loop, s, Over::None});
        if (x.loop != y.loop) {
          add_pushoff_points(x.loop, x.index, false, y.loop, s, false);
          add_pushoff_points(y.loop, y.index, false, x.loop, -s, false);
        }
      }
  return r;
}

int half(int twice) {
  if (twice % 2 != 0) throw std::logic_error("odd linking sum in pairing");
  return twice / 2;
}

}  // namespace

void check_cycle(const CombMap& m, Color color, const SpineCurve& a) {
  check_cycle(m, checkerboard(m), color, a);
}

Realization realize(const CombMap& m, Color color, const std::vector<SpineCurve>& groups) {
  return realize(m, checkerboard(m), color, groups);
}

int pairing(const CombMap& m, Color color, const SpineCurve& a, const SpineCurve& b) {
  Realization r = realize(m, color, {a, b});
  const auto& d = r.diagram;
  return half(lk(d, r.pushoff_of_group[0], r.curve_of_group[1]) + lk(d, r.pushoff_of_group[1], r.curve_of_group[0]));
}

namespace {

// Component index of the strand through each dart.
std::vector<int> component_of_dart(const CombMap& m, int* count) {
  auto comps = strand_components(m);
  std::vector<int> of(m.dart_count(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int d : comps[i]) {
      of[d] = static_cast<int>(i);
      of[rotate(d, 2)] = static_cast<int>(i);
    }
  *count = static_cast<int>(comps.size());
  return of;
}

CombMap oriented_copy(const CombMap& m) { return m.oriented() ? m : m.with_default_orientation(); }

}  // namespace

CurveDiagram boundary_pushoffs(const CombMap& input, Color color) {
  CombMap m = oriented_copy(input);
  Checkerboard cb = checkerboard(m);
  int k = 0;
  auto comp = component_of_dart(m, &k);
  CurveDiagram d;
  for (int i = 0; i < k; ++i) d.curves.push_back(Curve{"L" + std::to_string(i), {}});
  for (int i = 0; i < k; ++i) d.curves.push_back(Curve{"L" + std::to_string(i) + "^", {}});
  for (int c = 0; c < m.size(); ++c) {
    int i = comp[dart_of(c, 0)], j = comp[dart_of(c, 1)];
    int e = cb.eta(color, c), eps = crossing_sign(m, c);
    d.points.push_back({i, j, eps, Over::First});
    // Over passage: the pushoff of L_i runs under L_i.
    d.points.push_back({i, k + i, e, Over::First});
    d.points.push_back({k + i, j, eps, Over::First});
    // Under passage: the pushoff of L_j runs over L_j.
    d.points.push_back({k + j, j, e, Over::First});
    d.points.push_back({i, k + j, eps, Over::First});
    d.points.push_back({k + i, k + j, eps, Over::First});
  }
  return d;
}

int slope(const CombMap& m, Color color) {
  CurveDiagram d = boundary_pushoffs(m, color);
  const int k = static_cast<int>(d.curves.size()) / 2;
  int s = 0;
  for (int i = 0; i < k; ++i) s += lk(d, {i}, {k + i});
  return s;
}

SpineCurve pushoff_cycle(const CombMap& input, Color color, int component) {
  CombMap m = oriented_copy(input);
  Checkerboard cb = checkerboard(m);
  auto comps = strand_components(m);
  if (component < 0 || component >= static_cast<int>(comps.size()))
    throw std::invalid_argument("no such component");
  std::vector<Passage> loop;
  for (int out : comps[component]) {
    int c = crossing_of(out);
    int in = (slot_of(out) + 2) & 3;
    int p = cb.parity(color, c);
    int corner = ((in ^ p) & 1) == 0 ? in : (in + 3) & 3;
    loop.push_back(Passage{c, corner});
  }
  return SpineCurve{{loop}};
}

int boundary_intersection(const CombMap& m) {
  Checkerboard cb = checkerboard(m);
  int total = 0;
  for (int c = 0; c < m.size(); ++c) {
    // Near each end of the vertical arc at c, dB and dW meet once on the
    // boundary torus; the sign depends on which color holds the even corners.
    int local = cb.corner_color(c, 0) == Color::B ? 1 : -1;
    total += local;  // over end
    total += local;  // under end
  }
  return total;
}

GoeritzForm goeritz(const CombMap& m, Color color) {
  Checkerboard cb = checkerboard(m);
  Spine sp = spine(m, color);
  GoeritzForm g;
  g.color = color;
  g.basis = sp.basis;
  g.beta1 = sp.beta1;
  g.spine_components = sp.components;
  g.slope = slope(m, color);
  const int n = sp.beta1;
  g.matrix.assign(n, std::vector<long long>(n, 0));
  if (n > 0) {
    // Basis loops plus a parallel copy of each for the diagonal.
    std::vector<SpineCurve> groups = sp.basis;
    groups.insert(groups.end(), sp.basis.begin(), sp.basis.end());
    Realization r = realize(m, cb, color, groups);
    const int ng = 2 * n;
    std::vector<int> base_group(r.diagram.curves.size(), -1), push_group(r.diagram.curves.size(), -1);
    for (int x = 0; x < ng; ++x) {
      for (int c : r.curve_of_group[x]) base_group[c] = x;
      for (int c : r.pushoff_of_group[x]) push_group[c] = x;
    }
    // table[x][y] = lk(pushoff of x, y)
    std::vector<std::vector<long long>> table(ng, std::vector<long long>(ng, 0));
    for (const auto& p : r.diagram.points) {
      int px = push_group[p.a], by = base_group[p.b];
      if (px >= 0 && by >= 0 && px != by && p.over == Over::First) table[px][by] += p.sign;
      int py = push_group[p.b], bx = base_group[p.a];
      if (py >= 0 && bx >= 0 && py != bx && p.over == Over::Second) table[py][bx] -= p.sign;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int jj = i == j ? j + n : j;
        long long twice = table[i][jj] + table[jj][i];
        if (twice % 2 != 0) throw std::logic_error("odd linking sum in pairing");
        g.matrix[i][j] = twice / 2;
      }
  }
  Inertia in = inertia(g.matrix);
  g.sigma = in.signature();
  g.det = in.det;
  return g;
}

std::string to_string(Definite d) {
  switch (d) {
    case Definite::Positive: return "positive";
    case Definite::Negative: return "negative";
    case Definite::Indefinite: return "indefinite";
    case Definite::Zero: return "zero";
  }
  return "";
}

Definite is_definite(const IntMatrix& a) {
  if (a.empty()) return Definite::Zero;
  Inertia in = inertia(a);
  const int n = static_cast<int>(a.size());
  if (in.positive == n) return Definite::Positive;
  if (in.negative == n) return Definite::Negative;
  return Definite::Indefinite;
}

Definite is_definite(const GoeritzForm& f) { return is_definite(f.matrix); }

bool alternating_by_definiteness(const CombMap& m) {
  Definite b = is_definite(goeritz(m, Color::B));
  Definite w = is_definite(goeritz(m, Color::W));
  // A zero form is vacuously definite of either sign.
  auto can_be = [](Definite d, Definite sign) { return d == sign || d == Definite::Zero; };
  return (can_be(b, Definite::Positive) && can_be(w, Definite::Negative)) ||
         (can_be(b, Definite::Negative) && can_be(w, Definite::Positive));
}

Rational sigma_invariant(const CombMap& m, Color color) {
  GoeritzForm g = goeritz(m, color);
  return Rational(g.sigma) - Rational(g.slope, 2);
}

}  // namespace surface_links
