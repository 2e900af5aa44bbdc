#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "surface_links/census.hpp"
#include "surface_links/curves.hpp"
#include "surface_links/exact.hpp"
#include "surface_links/gauss.hpp"
#include "surface_links/goeritz.hpp"

using namespace surface_links;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
// Fully alternating, genus 1.
const char* kGenusOne = "O1+ U2+ O3- U1+ O2+ U3-";

CombMap from_code(const char* code) { return gauss_to_surface(parse_gauss(code)); }
CombMap unknot() { return CombMap::from_partner({}, {}, 1); }

// Loop around crossing c through its four corner faces.
DualWalk loop_around(int c) { return {{dart_of(c, 0), dart_of(c, 3), dart_of(c, 2), dart_of(c, 1)}}; }

std::vector<std::vector<long long>> distinct_positions(const std::vector<DualWalk>& walks, std::mt19937& rng) {
  std::size_t total = 0;
  for (const auto& w : walks) total += w.darts.size();
  std::vector<long long> pool(total);
  for (std::size_t i = 0; i < total; ++i) pool[i] = static_cast<long long>(i) + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::vector<long long>> out;
  std::size_t k = 0;
  for (const auto& w : walks) {
    out.emplace_back();
    for (std::size_t i = 0; i < w.darts.size(); ++i) out.back().push_back(pool[k++]);
  }
  return out;
}

IntMatrix congruent(const IntMatrix& a, const IntMatrix& p) {
  std::size_t n = a.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[i][j] += p[k][i] * a[k][l] * p[l][j];
  return out;
}

BigInt laplace_det(const IntMatrix& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor.back().push_back(a[i][k]);
    }
    BigInt term = a[0][j] * laplace_det(minor);
    total += j % 2 ? BigInt(-term) : term;
  }
  return total;
}

}  // namespace

TEST(Exact, SmallExamples) {
  Inertia x = inertia({{2, -1}, {-1, 2}});
  EXPECT_EQ(x.positive, 2);
  EXPECT_EQ(x.det, 3);
  Inertia y = inertia({{1, 2}, {2, 1}});
  EXPECT_EQ(y.positive, 1);
  EXPECT_EQ(y.negative, 1);
  EXPECT_EQ(y.det, -3);
  Inertia z = inertia({{0, 0}, {0, 0}});
  EXPECT_EQ(z.zero, 2);
  EXPECT_EQ(inertia({}).det, 1);
  EXPECT_EQ(inertia({{0, 1}, {1, 0}}).signature(), 0);
  EXPECT_THROW(inertia({{1, 2}, {3, 1}}), std::invalid_argument);
  EXPECT_THROW(inertia({{1, 2}}), std::invalid_argument);
}

TEST(Exact, CongruenceInvarianceAndDeterminant) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 5;
    IntMatrix a(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) a[i][j] = a[j][i] = entry(rng);
    // unimodular: unit upper triangular
    IntMatrix p(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
      p[i][i] = 1;
      for (int j = i + 1; j < n; ++j) p[i][j] = entry(rng);
    }
    Inertia x = inertia(a), y = inertia(congruent(a, p));
    EXPECT_EQ(x.positive, y.positive);
    EXPECT_EQ(x.negative, y.negative);
    EXPECT_EQ(x.det, laplace_det(a));
    EXPECT_EQ(y.det, x.det);
  }
}

TEST(Lk, ParallelContractibleCirclesAreUnlinked) {
  CombMap t = from_code(kTrefoil);
  std::mt19937 rng(1);
  for (Over o : {Over::First, Over::Second}) {
    std::vector<DualWalk> walks{loop_around(0), loop_around(0)};
    CurveDiagram d = realize_dual_walks(t, walks, {{1, 1, 1, 1}, {2, 2, 2, 2}}, [o](int, int) { return o; });
    EXPECT_EQ(lk(d, {0}, {1}), 0);
    EXPECT_EQ(lk(d, {1}, {0}), 0);
    CurveDiagram e = realize_dual_walks(t, {loop_around(0), loop_around(1)}, distinct_positions(walks, rng),
                                        [o](int, int) { return o; });
    EXPECT_EQ(lk(e, {0}, {1}), 0);
  }
}

TEST(Lk, MeridianOverLongitudeOnTorus) {
  CombMap v = from_code("O1+ O2+ U1+ U2+");
  ASSERT_EQ(genus(v), 1);
  std::mt19937 rng(2);
  int found = 0;
  for (int trial = 0; trial < 500 && found < 5; ++trial) {
    DualWalk a = oracle::random_dual_walk(v, rng, 2), b = oracle::random_dual_walk(v, rng, 2);
    int x = oracle::homological_intersection(v, a, b);
    if (std::abs(x) != 1) continue;
    auto positions = distinct_positions({a, b}, rng);
    CurveDiagram d = realize_dual_walks(v, {a, b}, positions, [](int, int) { return Over::First; });
    if (d.points.size() != 1) continue;
    ++found;
    EXPECT_EQ(lk(d, {0}, {1}) - lk(d, {1}, {0}), x);
    EXPECT_EQ(lk(d, {1}, {0}), 0);
    EXPECT_EQ(std::abs(lk(d, {0}, {1})), 1);
  }
  EXPECT_GT(found, 0);
}

TEST(Lk, PlanarPairsMatchClassicalLinkingNumber) {
  std::mt19937 rng(4);
  auto planar = census(4);
  std::erase_if(planar, [](const CombMap& m) { return genus(m) != 0; });
  int hopf = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const CombMap& m = planar[trial % planar.size()];
    DualWalk a = oracle::random_dual_walk(m, rng, 6), b = oracle::random_dual_walk(m, rng, 6);
    std::bernoulli_distribution coin(0.5);
    CurveDiagram d = realize_dual_walks(m, {a, b}, distinct_positions({a, b}, rng),
                                        [&](int, int) { return coin(rng) ? Over::First : Over::Second; });
    // half the signed count of all crossings, each signed over-strand first
    int twice = 0;
    for (const auto& p : d.points) {
      if (p.a == p.b) continue;
      int s = p.a == 0 ? p.sign : -p.sign;
      bool first_over = (p.over == Over::First) == (p.a == 0);
      twice += first_over ? s : -s;
    }
    ASSERT_EQ(twice % 2, 0);
    EXPECT_EQ(lk(d, {0}, {1}), twice / 2);
    EXPECT_EQ(lk(d, {0}, {1}), lk(d, {1}, {0}));
    if (std::abs(twice / 2) == 1) ++hopf;
  }
  EXPECT_GT(hopf, 0);
}

TEST(Lk, AsymmetryEqualsIntersection) {
  std::mt19937 rng(6);
  auto maps = census(4);
  for (int trial = 0; trial < 300; ++trial) {
    const CombMap& m = maps[rng() % maps.size()];
    DualWalk a = oracle::random_dual_walk(m, rng, 5), b = oracle::random_dual_walk(m, rng, 7);
    std::bernoulli_distribution coin(0.5);
    CurveDiagram d = realize_dual_walks(m, {a, b}, distinct_positions({a, b}, rng),
                                        [&](int, int) { return coin(rng) ? Over::First : Over::Second; });
    int x = oracle::homological_intersection(m, a, b);
    EXPECT_EQ(lk(d, {0}, {1}) - lk(d, {1}, {0}), x);
    EXPECT_EQ(intersection_number(d, {0}, {1}), x);
  }
}

TEST(Lk, SharedPointWithoutLayeringIsAnError) {
  CurveDiagram d;
  d.curves.resize(2);
  d.points.push_back({0, 1, 1, Over::None});
  EXPECT_THROW(lk(d, {0}, {1}), MissingCrossingData);
}

TEST(Spine, TrefoilBetti) {
  CombMap t = from_code(kTrefoil);
  Checkerboard cb = checkerboard(t);
  for (Color c : {Color::B, Color::W}) {
    Spine s = spine(t, c);
    int faces_of_color = static_cast<int>(std::count(cb.labels.begin(), cb.labels.end(), c));
    EXPECT_EQ(s.beta1, 3 - faces_of_color + 1);
    EXPECT_EQ(s.beta1, faces_of_color == 2 ? 2 : 1);
    EXPECT_EQ(static_cast<int>(s.basis.size()), s.beta1);
  }
}

TEST(Spine, UnknotAndBettiFormula) {
  EXPECT_EQ(spine(unknot(), Color::B).beta1, 0);
  for (const auto& m : census(4)) {
    Checkerboard cb = checkerboard(m);
    for (Color c : {Color::B, Color::W}) {
      Spine s = spine(m, c);
      int v = static_cast<int>(std::count(cb.labels.begin(), cb.labels.end(), c));
      EXPECT_EQ(s.beta1, m.size() - v + s.components);
      for (const auto& cycle : s.basis) EXPECT_NO_THROW(check_cycle(m, c, cycle));
    }
  }
}

TEST(Spine, NonCycleIsRejected) {
  CombMap t = from_code(kTrefoil);
  SpineCurve open{{{Passage{0, 0}}}};
  Color c = checkerboard(t).corner_color(0, 0);
  EXPECT_THROW(check_cycle(t, c, open), std::invalid_argument);
  EXPECT_THROW(pairing(t, c, open, open), std::invalid_argument);
}

TEST(Pairing, EmptyCycleGivesZero) {
  for (const auto& m : census(3))
    for (Color c : {Color::B, Color::W})
      for (const auto& a : spine(m, c).basis) EXPECT_EQ(pairing(m, c, a, SpineCurve{}), 0);
}

TEST(Pairing, SymmetricAndBilinear) {
  for (const auto& m : census(4)) {
    for (Color c : {Color::B, Color::W}) {
      Spine s = spine(m, c);
      const auto& basis = s.basis;
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          int ab = pairing(m, c, basis[i], basis[j]);
          EXPECT_EQ(ab, pairing(m, c, basis[j], basis[i]));
          for (std::size_t k = 0; k < basis.size(); ++k)
            EXPECT_EQ(pairing(m, c, add(basis[i], basis[k]), basis[j]), ab + pairing(m, c, basis[k], basis[j]));
        }
    }
  }
}

TEST(Pairing, AgreesWithGoeritzMatrix) {
  for (const auto& m : census(4))
    for (Color c : {Color::B, Color::W}) {
      GoeritzForm f = goeritz(m, c);
      for (std::size_t i = 0; i < f.basis.size(); ++i)
        for (std::size_t j = 0; j < f.basis.size(); ++j)
          EXPECT_EQ(pairing(m, c, f.basis[i], f.basis[j]), f.matrix[i][j]);
    }
}

TEST(Pairing, PlanarFormIsLocalSumOverBands) {
  for (const auto& m : census(4)) {
    if (genus(m) != 0) continue;
    Checkerboard cb = checkerboard(m);
    for (Color c : {Color::B, Color::W}) {
      GoeritzForm f = goeritz(m, c);
      for (std::size_t i = 0; i < f.basis.size(); ++i)
        for (std::size_t j = 0; j < f.basis.size(); ++j) {
          auto a = coefficients(m, c, f.basis[i]), b = coefficients(m, c, f.basis[j]);
          long long sum = 0;
          for (int x = 0; x < m.size(); ++x) sum += cb.eta(c, x) * a[x] * b[x];
          EXPECT_EQ(f.matrix[i][j], sum);
        }
    }
  }
}

TEST(Pairing, TrefoilTwoFaceColorMatrix) {
  CombMap t = from_code(kTrefoil);
  Checkerboard cb = checkerboard(t);
  Color two = std::count(cb.labels.begin(), cb.labels.end(), Color::B) == 2 ? Color::B : Color::W;
  GoeritzForm f = goeritz(t, two);
  ASSERT_EQ(f.beta1, 2);
  Inertia x = inertia(f.matrix);
  EXPECT_EQ(x.det, 3);
  EXPECT_EQ(std::abs(x.signature()), 2);
  IntMatrix classical = oracle::classical_goeritz(t, two);
  EXPECT_EQ(inertia(classical).det, x.det);
  EXPECT_EQ(inertia(classical).signature(), x.signature());
}

// The pushoff of a component crosses each of its bands twice, so its
// self-pairing counts the boundary slope twice.
TEST(Pairing, PushoffSelfPairingIsTwiceTheSlope) {
  for (const auto& raw : census(4)) {
    CombMap m = raw.with_default_orientation();
    int components = static_cast<int>(strand_components(m).size());
    for (Color c : {Color::B, Color::W}) {
      int total = 0;
      for (int i = 0; i < components; ++i) {
        SpineCurve p = pushoff_cycle(m, c, i);
        EXPECT_NO_THROW(check_cycle(m, c, p));
        total += pairing(m, c, p, p);
      }
      EXPECT_EQ(total, 2 * slope(m, c));
    }
  }
}

TEST(Goeritz, TrefoilOppositeSigns) {
  CombMap t = from_code(kTrefoil);
  GoeritzForm b = goeritz(t, Color::B), w = goeritz(t, Color::W);
  EXPECT_EQ(b.beta1, 1);
  EXPECT_EQ(b.sigma, 1);
  EXPECT_EQ(w.beta1, 2);
  EXPECT_EQ(w.sigma, -2);
  EXPECT_EQ(is_definite(b), Definite::Positive);
  EXPECT_EQ(is_definite(w), Definite::Negative);
  EXPECT_EQ(b.det, 3);
  EXPECT_EQ(w.det, 3);
}

TEST(Goeritz, Unknot) {
  GoeritzForm f = goeritz(unknot(), Color::B);
  EXPECT_TRUE(f.matrix.empty());
  EXPECT_EQ(f.sigma, 0);
  EXPECT_EQ(f.slope, 0);
  EXPECT_EQ(is_definite(f), Definite::Zero);
}

TEST(Goeritz, FormInvariantsOverCensus) {
  for (const auto& m : census(4))
    for (Color c : {Color::B, Color::W}) {
      GoeritzForm f = goeritz(m, c);
      EXPECT_TRUE(is_symmetric(f.matrix));
      EXPECT_EQ(static_cast<int>(f.matrix.size()), f.beta1);
      EXPECT_LE(std::abs(f.sigma), f.beta1);
      Definite d = is_definite(f);
      if (d == Definite::Positive || d == Definite::Negative) EXPECT_EQ(std::abs(f.sigma), f.beta1);
      EXPECT_EQ(f.slope, slope(m, c));
    }
}

// With B the positive surface the signature difference has this sign; it is
// the opposite of the orientation quoted for this identity (see README).
TEST(Goeritz, GenusOneAlternatingSample) {
  CombMap m = from_code(kGenusOne);
  ASSERT_EQ(genus(m), 1);
  ASSERT_TRUE(is_alternating(m));
  GoeritzForm b = goeritz(m, Color::B), w = goeritz(m, Color::W);
  EXPECT_EQ(b.beta1, 2);
  EXPECT_EQ(b.sigma, 2);
  EXPECT_EQ(b.slope, 4);
  EXPECT_EQ(w.beta1, 3);
  EXPECT_EQ(w.sigma, -3);
  EXPECT_EQ(w.slope, -2);
  EXPECT_EQ(sigma_invariant(m, Color::B) - sigma_invariant(m, Color::W), Rational(2 * genus(m)));
  EXPECT_EQ(b.slope - w.slope, 2 * m.size());
  EXPECT_EQ(b.beta1 + w.beta1, m.size() + 2 * genus(m));
}

TEST(Definite, Examples) {
  EXPECT_EQ(is_definite(IntMatrix{{2, -1}, {-1, 2}}), Definite::Positive);
  EXPECT_EQ(is_definite(IntMatrix{{1, 2}, {2, 1}}), Definite::Indefinite);
  EXPECT_EQ(is_definite(IntMatrix{{1, -2}, {-2, 1}}), Definite::Indefinite);
  EXPECT_EQ(is_definite(IntMatrix{}), Definite::Zero);
  EXPECT_EQ(is_definite(IntMatrix{{-2, 1}, {1, -2}}), Definite::Negative);
  EXPECT_EQ(is_definite(IntMatrix{{1, 0}, {0, 0}}), Definite::Indefinite);
}

TEST(Definite, AlternatingByDefiniteness) {
  CombMap t = from_code(kTrefoil);
  EXPECT_TRUE(alternating_by_definiteness(t));
  EXPECT_EQ(alternating_by_definiteness(t), is_alternating(t));
  CombMap s = from_code("O1+ U2+ U3+ U1+ O2+ O3+");
  EXPECT_FALSE(alternating_by_definiteness(s));
  EXPECT_FALSE(is_alternating(s));
  for (const auto& m : census(4)) EXPECT_EQ(alternating_by_definiteness(m), is_alternating(m));
  EXPECT_THROW(alternating_by_definiteness(from_code("O1+ O2+ U1+ U2+")), NotColorable);
}

TEST(SigmaInvariant, Examples) {
  CombMap t = from_code(kTrefoil);
  EXPECT_EQ(sigma_invariant(t, Color::W) - sigma_invariant(t, Color::B), Rational(0));
  EXPECT_EQ(sigma_invariant(unknot(), Color::B), Rational(0));
  EXPECT_EQ(sigma_invariant(unknot(), Color::W), Rational(0));
  GoeritzForm b = goeritz(t, Color::B);
  EXPECT_EQ(sigma_invariant(t, Color::B), Rational(b.sigma) - Rational(b.slope, 2));
}

TEST(Slope, BoundaryIntersectionEqualsSlopeDifference) {
  for (const auto& raw : census(4)) {
    CombMap m = raw.with_default_orientation();
    EXPECT_EQ(boundary_intersection(m), slope(m, Color::B) - slope(m, Color::W));
  }
}

TEST(Slope, AlternatingIdentitiesInComputedForm) {
  for (const auto& m : census(4)) {
    if (!is_alternating(m)) continue;
    GoeritzForm b = goeritz(m, Color::B), w = goeritz(m, Color::W);
    int g = genus(m);
    EXPECT_EQ(sigma_invariant(m, Color::B) - sigma_invariant(m, Color::W), Rational(2 * g));
    EXPECT_EQ(b.slope - w.slope, 2 * m.size());
    EXPECT_EQ(b.beta1 + w.beta1, m.size() + 2 * g);
    EXPECT_EQ(is_definite(b), b.beta1 ? Definite::Positive : Definite::Zero);
    EXPECT_EQ(is_definite(w), w.beta1 ? Definite::Negative : Definite::Zero);
  }
}
