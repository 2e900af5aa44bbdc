#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "surface_links/census.hpp"
#include "surface_links/comb_map.hpp"
#include "surface_links/gauss.hpp"

using namespace surface_links;

namespace {

CombMap from_code(const char* code) { return gauss_to_surface(parse_gauss(code)); }

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kVirtualTrefoil = "O1+ O2+ U1+ U2+";

CombMap unknot() { return CombMap::from_partner({}, {}, 1); }

CombMap figure_eight() { return gauss_to_surface(oracle::braid_closure({1, -2, 1, -2}, 3)); }

// Face permutation orbits counted directly from the matching.
int brute_force_faces(const CombMap& m) {
  std::vector<char> seen(m.dart_count(), 0);
  int count = 0;
  for (int d = 0; d < m.dart_count(); ++d) {
    if (seen[d]) continue;
    ++count;
    for (int e = d; !seen[e]; e = rotate(m.partner(e), 3)) seen[e] = 1;
  }
  return count + 2 * m.unknots();
}

// Two-colors the dual graph by search; nullopt when it has an odd cycle.
std::optional<std::vector<int>> bipartition(const CombMap& m) {
  FaceStructure fs = faces(m);
  int n = static_cast<int>(fs.faces.size());
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int d : fs.faces[f]) {
        int g = fs.face_of[m.partner(d)];
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          stack.push_back(g);
        } else if (color[g] == color[f]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace

TEST(Faces, TrefoilHasFiveFaces) {
  CombMap t = from_code(kTrefoil);
  EXPECT_EQ(faces(t).count(), 5);
  EXPECT_EQ(brute_force_faces(t), 5);
}

TEST(Faces, UnknotHasTwoFaces) { EXPECT_EQ(faces(unknot()).count(), 2); }

TEST(Faces, VirtualTrefoilHasTwoFaces) {
  CombMap v = from_code(kVirtualTrefoil);
  EXPECT_EQ(faces(v).count(), 2);
  // V - E + F = 2 - 2g with g = 1
  EXPECT_EQ(v.size() - 2 * v.size() + faces(v).count(), 0);
}

TEST(Faces, PartitionDartsOverCensus) {
  for (const auto& m : census(4)) {
    FaceStructure fs = faces(m);
    std::size_t total = 0;
    for (const auto& f : fs.faces) total += f.size();
    EXPECT_EQ(total, static_cast<std::size_t>(4 * m.size()));
    std::set<int> darts;
    for (const auto& f : fs.faces) darts.insert(f.begin(), f.end());
    EXPECT_EQ(darts.size(), total);
    EXPECT_EQ(fs.count(), brute_force_faces(m));
  }
}

TEST(Faces, MalformedMatchingIsRejected) {
  EXPECT_THROW(CombMap::from_partner({1, 0, 3}), StructuralError);
  EXPECT_THROW(CombMap::from_partner({0, 2, 1, 3}), StructuralError);
}

TEST(Genus, Examples) {
  EXPECT_EQ(genus(from_code(kTrefoil)), 0);
  EXPECT_EQ(genus(from_code(kVirtualTrefoil)), 1);
  EXPECT_EQ(genus(unknot()), 0);
}

TEST(Genus, EulerCharacteristicOverCodeCensus) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& shadow : code_shadows(n)) {
      CombMap m = gauss_to_surface(shadow);
      int chi = m.size() - 2 * m.size() + faces(m).count() - 2 * m.unknots();
      EXPECT_EQ(chi % 2, 0);
      EXPECT_LE(chi, 2 * static_cast<int>(connected_pieces(m).size()));
      EXPECT_GE(genus(m), 0);
    }
}

TEST(Alternating, Examples) {
  EXPECT_TRUE(is_alternating(from_code(kTrefoil)));
  EXPECT_FALSE(is_alternating(from_code("O1+ U2+ U3+ U1+ O2+ O3+")));
  EXPECT_TRUE(is_alternating(unknot()));
}

TEST(Coloring, TrefoilClassSizes) {
  FaceStructure fs = checkerboard_coloring(from_code(kTrefoil));
  ASSERT_TRUE(fs.coloring.has_value());
  int ones = static_cast<int>(std::count(fs.coloring->begin(), fs.coloring->end(), 1));
  std::multiset<int> sizes{ones, static_cast<int>(fs.coloring->size()) - ones};
  EXPECT_EQ(sizes, (std::multiset<int>{2, 3}));
}

TEST(Coloring, AdjacentFacesDiffer) {
  for (const auto& m : census(4)) {
    FaceStructure fs = checkerboard_coloring(m);
    for (int d = 0; d < m.dart_count(); ++d)
      EXPECT_NE((*fs.coloring)[fs.face_of[d]], (*fs.coloring)[fs.face_of[m.partner(d)]]);
  }
}

TEST(Coloring, VirtualTrefoilMatchesBipartiteness) {
  CombMap v = from_code(kVirtualTrefoil);
  bool bipartite = bipartition(v).has_value();
  EXPECT_EQ(is_colorable(v), bipartite);
  if (!bipartite) EXPECT_THROW(checkerboard_coloring(v), NotColorable);
  EXPECT_FALSE(bipartite);
}

TEST(Coloring, AgreesWithBipartitenessOnCodeCensus) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shadow : code_shadows(n)) {
      CombMap m = gauss_to_surface(shadow);
      EXPECT_EQ(is_colorable(m), bipartition(m).has_value()) << to_string(shadow);
    }
}

TEST(Coloring, ConnectedAlternatingDiagramsAreColorable) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& shadow : code_shadows(n))
      for (const auto& code : decorations(shadow)) {
        CombMap m = gauss_to_surface(code);
        if (is_alternating(m) && connected_pieces(m).size() == 1) EXPECT_TRUE(is_colorable(m)) << to_string(code);
      }
}

TEST(Writhe, RightHandedTrefoil) {
  CombMap t = from_code(kTrefoil).with_default_orientation();
  EXPECT_EQ(writhe(t), 3);
  for (int c = 0; c < t.size(); ++c) EXPECT_EQ(crossing_sign(t, c), 1);
}

TEST(Writhe, SumOfSignsAndMirror) {
  for (const auto& raw : census(4)) {
    CombMap m = raw.with_default_orientation();
    int sum = 0;
    for (int c = 0; c < m.size(); ++c) sum += crossing_sign(m, c);
    EXPECT_EQ(writhe(m), sum);
    EXPECT_EQ(writhe(mirror(m)), -writhe(m));
  }
}

TEST(Writhe, RelabelingInvariance) {
  std::mt19937 rng(7);
  for (const auto& raw : census(4)) {
    CombMap m = raw.with_default_orientation();
    EXPECT_EQ(writhe(oracle::relabeled(m, rng)), writhe(m));
  }
}

TEST(Writhe, CrossinglessIsZero) { EXPECT_EQ(writhe(unknot().with_default_orientation()), 0); }

TEST(Isomorphism, SelfWitnessIsIdentity) {
  CombMap t = from_code(kTrefoil);
  auto iso = isomorphic(t, t);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(check_iso(t, t, *iso));
}

TEST(Isomorphism, RelabeledTrefoil) {
  CombMap t = from_code(kTrefoil);
  CombMap r = t.with_ids({30, 10, 20});
  auto iso = isomorphic(t, r);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(check_iso(t, r, *iso));
  EXPECT_EQ(canonical_form(t), canonical_form(r));
}

TEST(Isomorphism, TrefoilIsNotFigureEight) {
  EXPECT_FALSE(isomorphic(from_code(kTrefoil), figure_eight()).has_value());
  EXPECT_FALSE(isomorphic(from_code(kTrefoil), figure_eight(), {true, true, true}).has_value());
}

TEST(Isomorphism, MirrorNeedsFlag) {
  CombMap t = from_code(kTrefoil);
  CombMap m = mirror(t);
  IsoFlags with_mirror;
  with_mirror.allow_mirror = true;
  auto iso = isomorphic(t, m, with_mirror);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(check_iso(t, m, *iso, with_mirror));
}

TEST(Isomorphism, CanonicalFormDecidesIsomorphismOnCensus) {
  std::mt19937 rng(11);
  auto maps = census(3);
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i; j < maps.size(); ++j) {
      bool iso = isomorphic(maps[i], maps[j]).has_value();
      EXPECT_EQ(iso, canonical_form(maps[i]) == canonical_form(maps[j]));
      EXPECT_EQ(iso, i == j);
    }
  for (const auto& m : maps) {
    CombMap r = oracle::relabeled(m, rng);
    EXPECT_EQ(canonical_form(r), canonical_form(m));
    auto iso = isomorphic(m, r);
    ASSERT_TRUE(iso.has_value());
    EXPECT_TRUE(check_iso(m, r, *iso));
  }
}

TEST(CanonicalForm, FlypeImageDiffers) {
  CombMap f = figure_eight();
  auto sites = oracle::nondegenerate_flypes(f);
  ASSERT_FALSE(sites.empty());
  CombMap g = apply_flype(f, sites.front());
  EXPECT_NE(canonical_form(f), canonical_form(g));
  EXPECT_FALSE(isomorphic(f, g).has_value());
}

TEST(CanonicalForm, EmptyDiagramSentinel) {
  EXPECT_EQ(canonical_form(CombMap{}), canonical_form(CombMap::from_partner({})));
  EXPECT_NE(canonical_form(CombMap{}), canonical_form(unknot()));
}

TEST(Json, RoundTripIsBitExact) {
  for (const auto& m : census(3)) {
    for (const CombMap& x : {m, m.with_default_orientation()}) {
      std::string s = to_json(x);
      CombMap back = from_json(s);
      EXPECT_EQ(to_json(back), s);
      EXPECT_EQ(canonical_form(back), canonical_form(x));
    }
  }
  std::string u = to_json(unknot());
  EXPECT_EQ(to_json(from_json(u)), u);
}

TEST(Json, MalformedInputIsRejected) {
  EXPECT_ANY_THROW(from_json("{\"crossings\":[{\"id\":1}],\"edges\":[]}"));
  EXPECT_ANY_THROW(from_json("not json"));
}
