#include "surface_links/curves.hpp"

#include <algorithm>

namespace surface_links {

namespace {

void check_disjoint(const CurveDiagram& d, const std::vector<int>& alpha, const std::vector<int>& beta,
                    std::vector<char>& in_a, std::vector<char>& in_b) {
  in_a.assign(d.curves.size(), 0);
  in_b.assign(d.curves.size(), 0);
  for (int i : alpha) in_a.at(i) = 1;
  for (int i : beta) {
    if (in_a.at(i)) throw std::invalid_argument("multicurves share a component");
    in_b.at(i) = 1;
  }
}

}  // namespace

int lk(const CurveDiagram& d, const std::vector<int>& alpha, const std::vector<int>& beta) {
  std::vector<char> in_a, in_b;
  check_disjoint(d, alpha, beta, in_a, in_b);
  int total = 0;
  for (const auto& p : d.points) {
    bool ab = in_a[p.a] && in_b[p.b];
    bool ba = in_b[p.a] && in_a[p.b];
    if (!ab && !ba) continue;
    if (p.over == Over::None) throw MissingCrossingData("double point without over/under data");
    // alpha over beta, sign (d_alpha x d_beta)
    if (ab && p.over == Over::First) total += p.sign;
    if (ba && p.over == Over::Second) total -= p.sign;
  }
  return total;
}

int intersection_number(const CurveDiagram& d, const std::vector<int>& alpha, const std::vector<int>& beta) {
  std::vector<char> in_a, in_b;
  check_disjoint(d, alpha, beta, in_a, in_b);
  int total = 0;
  for (const auto& p : d.points) {
    if (in_a[p.a] && in_b[p.b]) total += p.sign;
    if (in_b[p.a] && in_a[p.b]) total -= p.sign;
  }
  return total;
}

int chord_crossing(long long a1, long long a2, long long b1, long long b2) {
  auto between = [](long long from, long long to, long long x) {
    // x strictly inside the counterclockwise arc from -> to
    if (from < to) return from < x && x < to;
    return x > from || x < to;
  };
  bool p = between(a1, a2, b1), q = between(a1, a2, b2);
  if (p == q) return 0;
  // counterclockwise order a1, b1, a2, b2 gives +1
  return p ? 1 : -1;
}

CurveDiagram realize_dual_walks(const CombMap& m, const std::vector<DualWalk>& walks,
                                const std::vector<std::vector<long long>>& positions,
                                const std::function<Over(int, int)>& over) {
  auto fs = faces(m);
  std::vector<int> index_in_face(m.dart_count());
  for (const auto& f : fs.faces)
    for (std::size_t i = 0; i < f.size(); ++i) index_in_face[f[i]] = static_cast<int>(i);
  long long span = 1;
  for (const auto& w : positions)
    for (long long x : w) span = std::max(span, std::abs(x) + 1);
  // boundary position of a point on the edge of dart e, seen from the face left of e
  auto boundary = [&](int e, long long key) {
    long long along = e < m.partner(e) ? key : -key;
    return static_cast<long long>(index_in_face[e]) * (4 * span) + 2 * span + along;
  };
  struct Chord {
    int curve, face;
    long long from, to;
  };
  CurveDiagram out;
  std::vector<Chord> chords;
  for (std::size_t w = 0; w < walks.size(); ++w) {
    const auto& darts = walks[w].darts;
    if (darts.empty()) throw std::invalid_argument("empty dual walk");
    if (positions.at(w).size() != darts.size()) throw std::invalid_argument("position count mismatch");
    Curve c;
    c.name = "walk" + std::to_string(w);
    const std::size_t L = darts.size();
    for (std::size_t i = 0; i < L; ++i) {
      int cur = darts[i], nxt = darts[(i + 1) % L];
      int face = fs.face_of[m.partner(cur)];
      if (fs.face_of[nxt] != face) throw std::invalid_argument("dual walk is not closed");
      c.steps.push_back({CurveStep::Kind::Edge, cur, 0, 0});
      long long from = boundary(m.partner(cur), positions[w][i]);
      long long to = boundary(nxt, positions[w][(i + 1) % L]);
      c.steps.push_back({CurveStep::Kind::Face, face, static_cast<int>(from), static_cast<int>(to)});
      chords.push_back({static_cast<int>(w), face, from, to});
    }
    out.curves.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const auto& x = chords[i];
      const auto& y = chords[j];
      if (x.face != y.face) continue;
      int s = chord_crossing(x.from, x.to, y.from, y.to);
      if (s == 0) continue;
      out.points.push_back({x.curve, y.curve, s, over(x.curve, y.curve)});
    }
  return out;
}

}  // namespace surface_links
