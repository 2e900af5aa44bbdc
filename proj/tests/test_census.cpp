#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

#include "surface_links/census.hpp"
#include "surface_links/gauss.hpp"
#include "surface_links/structure.hpp"

using namespace surface_links;

namespace {

// Brute force: every over/under choice on every shadow, then dedup.
std::set<std::string> brute_force_diagrams(int n) {
  std::set<std::string> forms;
  for (const auto& s : colorable_shadows(n)) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> partner(4 * n);
      for (int d = 0; d < 4 * n; ++d) {
        auto turn = [&](int x) { return mask >> crossing_of(x) & 1 ? rotate(x, 1) : x; };
        int e = s.map.partner(d);
        partner[turn(d)] = turn(e);
      }
      forms.insert(canonical_form(CombMap::from_partner(partner)));
    }
  }
  return forms;
}

}  // namespace

TEST(Census, ShadowCounts) {
  std::vector<std::size_t> expected{1, 4, 10, 64};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(colorable_shadows(n).size(), expected[n - 1]) << n;
}

TEST(Census, DiagramCounts) {
  std::vector<std::size_t> expected{2, 10, 62, 793};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(colorable_diagrams(n).size(), expected[n - 1]) << n;
  EXPECT_EQ(census(4).size(), 2u + 10 + 62 + 793);
}

TEST(Census, MatchesBruteForceDecoration) {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> forms;
    for (const auto& m : colorable_diagrams(n)) forms.insert(canonical_form(m));
    EXPECT_EQ(forms, brute_force_diagrams(n)) << n;
  }
}

TEST(Census, DiagramsAreConnectedColorableAndDistinct) {
  auto maps = census(4);
  std::set<std::string> forms;
  for (const auto& m : maps) {
    EXPECT_EQ(connected_pieces(m).size(), 1u);
    EXPECT_TRUE(is_colorable(m));
    forms.insert(canonical_form(m));
  }
  EXPECT_EQ(forms.size(), maps.size());
}

TEST(Census, AlternatingFilter) {
  for (int n = 1; n <= 4; ++n) {
    auto all = colorable_diagrams(n);
    auto alt = colorable_diagrams(n, true);
    std::size_t count = 0;
    for (const auto& m : all) count += is_alternating(m);
    EXPECT_EQ(alt.size(), count);
    for (const auto& m : alt) EXPECT_TRUE(is_alternating(m));
  }
}

TEST(Census, OrderedByCrossingsThenForm) {
  auto maps = census(3);
  for (std::size_t i = 1; i < maps.size(); ++i) {
    bool ordered = maps[i - 1].size() < maps[i].size() ||
                   (maps[i - 1].size() == maps[i].size() && canonical_form(maps[i - 1]) < canonical_form(maps[i]));
    EXPECT_TRUE(ordered);
  }
}

TEST(CodeCensus, ShadowCounts) {
  std::vector<std::size_t> expected{2, 8, 34, 182};
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(code_shadows(n).size(), expected[n - 1]) << n;
}

TEST(CodeCensus, DecorationsAreDistinctClasses) {
  for (const auto& shadow : code_shadows(3)) {
    auto codes = decorations(shadow);
    std::set<std::string> keys;
    for (const auto& c : codes) {
      validate(c);
      keys.insert(canonical_gauss(c));
      EXPECT_EQ(canonical_shadow(c), canonical_shadow(shadow));
    }
    EXPECT_EQ(keys.size(), codes.size());
    EXPECT_LE(codes.size(), 64u);
  }
}

TEST(Workers, EnvironmentCapsThreads) {
  setenv("SURFACE_LINKS_THREADS", "2", 1);
  EXPECT_EQ(worker_count(), 2);
  unsetenv("SURFACE_LINKS_THREADS");
  EXPECT_GE(worker_count(), 1);
  std::vector<int> hits(100, 0);
  parallel_for(100, [&](int i) { hits[i] += 1; });
  for (int h : hits) EXPECT_EQ(h, 1);
  EXPECT_THROW(parallel_for(10, [](int i) {
                 if (i == 3) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}
