#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "orikami/analysis.hpp"
#include "orikami/generators.hpp"
#include "orikami/knotid.hpp"

namespace orikami {
namespace {

constexpr double kPi = std::numbers::pi;

Folding book(double theta) { return single_crease(theta, {{0.5, 0.0}, {0.0, 1.0}}); }

bool has_kind(const std::vector<IntersectionFinding>& xs, IntersectionKind k) {
  for (const auto& x : xs) {
    if (x.kind == k) return true;
  }
  return false;
}

bool touches_both_flaps(const PaperLoop& loop) {
  bool b = false, c = false;
  const std::size_t n = loop.waypoints.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = loop.waypoints[i], q = loop.waypoints[(i + 1) % n];
    for (int k = 0; k <= 20; ++k) {
      const Vec2 x = p + (q - p) * (k / 20.0);
      b |= in_fixture_region_b(x);
      c |= in_fixture_region_c(x);
    }
  }
  return b && c;
}

// Loops drawn by hand from the top-left flap to the bottom-right one.
std::vector<PaperLoop> hand_routed_loops() {
  return {
      {{{0.05, 0.95}, {0.3, 0.5}, {0.95, 0.05}, {0.7, 0.5}}},
      {{{0.02, 0.98}, {0.02, 0.45}, {0.55, 0.02}, {0.98, 0.02}, {0.98, 0.55}, {0.45, 0.98}}},
      {{{0.1, 0.9}, {0.45, 0.48}, {0.9, 0.1}, {0.55, 0.52}}},
      {{{0.15, 0.98}, {0.1, 0.7}, {0.5, 0.45}, {0.85, 0.02}, {0.98, 0.2}, {0.5, 0.6}}},
      {{{0.05, 0.7}, {0.3, 0.95}, {0.6, 0.55}, {0.95, 0.3}, {0.7, 0.05}, {0.4, 0.45}}},
  };
}

TEST(SelfIntersections, IdentityAndBookFold) {
  EXPECT_TRUE(self_intersections(Folding::identity()).empty());
  const auto xs = self_intersections(book(kPi / 2));
  ASSERT_EQ(xs.size(), 1u);
  EXPECT_EQ(xs[0].kind, IntersectionKind::SharedCrease);
  EXPECT_LT(xs[0].face_a, xs[0].face_b);
}

TEST(SelfIntersections, FlatFoldOverlaps) {
  const auto xs = self_intersections(book(kPi));
  ASSERT_EQ(xs.size(), 1u);
  EXPECT_EQ(xs[0].kind, IntersectionKind::CoincidentOverlap);
}

TEST(SelfIntersections, FixtureCrossesTransversally) {
  const auto xs = self_intersections(improper_fixture());
  EXPECT_TRUE(has_kind(xs, IntersectionKind::TransversalCrossing));
  for (std::size_t i = 1; i < xs.size(); ++i) {
    EXPECT_LT(std::pair(xs[i - 1].face_a, xs[i - 1].face_b), std::pair(xs[i].face_a, xs[i].face_b));
  }
}

TEST(IsInjective, Examples) {
  EXPECT_TRUE(is_injective(book(kPi / 2)));
  EXPECT_FALSE(is_injective(book(kPi)));
  EXPECT_FALSE(is_injective(improper_fixture()));
}

TEST(ProperVerdict, Examples) {
  EXPECT_EQ(properness_verdict(book(kPi / 3)).verdict, Properness::ProperInjective);
  EXPECT_EQ(properness_verdict(book(kPi)).verdict, Properness::ProperFlatContact);
  const PropernessVerdict v = properness_verdict(improper_fixture());
  EXPECT_EQ(v.verdict, Properness::ImproperTransversal);
  EXPECT_TRUE(has_kind(v.findings, IntersectionKind::TransversalCrossing));
}

TEST(ProperVerdict, FixtureRestrictionsAreProper) {
  for (char strip : {'B', 'C'}) {
    const PropernessVerdict v = properness_verdict(improper_fixture_without(strip));
    EXPECT_TRUE(v.verdict == Properness::ProperInjective ||
                v.verdict == Properness::ProperFlatContact)
        << strip << ": " << to_string(v.verdict);
    EXPECT_FALSE(has_kind(v.findings, IntersectionKind::TransversalCrossing));
  }
}

TEST(ProperVerdict, FlatCoincidenceAroundInteriorVertexIsUnknown) {
  // Two perpendicular flat folds meeting at the centre.
  const CreasePattern cp = build_pattern(
      {{0.5, 0.5}, {0.5, 0.0}, {1.0, 0.5}, {0.5, 1.0}, {0.0, 0.5}}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  ASSERT_EQ(cp.faces.size(), 4u);
  std::vector<RigidEmbedding> maps(4);
  for (int i = 0; i < 4; ++i) {
    Vec2 c{};
    for (Vec2 p : cp.face_polygon(i)) c = c + p;
    const bool right = c.x > 0.5 * cp.face_polygon(i).size();
    const bool top = c.y > 0.5 * cp.face_polygon(i).size();
    RigidEmbedding& e = maps[i];
    e.col_x = {right ? -1.0 : 1.0, 0, 0};
    e.col_y = {0, top ? -1.0 : 1.0, 0};
    e.translation = {right ? 1.0 : 0.0, top ? 1.0 : 0.0, 0};
  }
  const Folding f(cp, maps);
  ASSERT_TRUE(validate_folding(f, true).valid());
  EXPECT_EQ(properness_verdict(f).verdict, Properness::Unknown);
}

TEST(ProperVerdict, Names) {
  EXPECT_EQ(to_string(Properness::ProperInjective), "ProperInjective");
  EXPECT_EQ(to_string(Properness::ImproperTransversal), "ImproperTransversal");
  EXPECT_EQ(to_string(IntersectionKind::CoincidentOverlap), "coincident-overlap");
}

TEST(Properties, ProperFoldingsAdmitNoKnots) {
  std::vector<Folding> corpus;
  for (double t : {0.2, 1.0, 2.0, 3.0, kPi}) corpus.push_back(book(t));
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    corpus.push_back(simple_fold_sequence(seed, 1 + static_cast<int>(seed)));
  }
  corpus.push_back(improper_fixture_without('B'));
  corpus.push_back(improper_fixture_without('C'));
  std::uint64_t loop_seed = 0;
  for (const Folding& f : corpus) {
    const Properness v = properness_verdict(f).verdict;
    ASSERT_TRUE(v == Properness::ProperInjective || v == Properness::ProperFlatContact);
    for (int i = 0; i < 50; ++i) {
      const SpatialPolyline img = fold_loop(f, random_loop(++loop_seed));
      if (!img.injective) continue;
      EXPECT_TRUE(certify(img, loop_seed).invariants_trivial) << "loop seed " << loop_seed;
    }
  }
}

TEST(Properties, SingleCreaseAdmitsNoKnots) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int flat = 0;
  for (int i = 0; i < 100; ++i) {
    const double theta = i % 10 == 0 ? kPi : 0.05 + (kPi - 0.05) * u(rng);
    const double phi = kPi * u(rng);
    const Folding f = single_crease(theta, {{0.2 + 0.6 * u(rng), 0.2 + 0.6 * u(rng)},
                                            {std::cos(phi), std::sin(phi)}});
    flat += theta == kPi ? 1 : 0;
    for (int j = 0; j < 3; ++j) {
      const SpatialPolyline img = fold_loop(f, random_loop(1000 * i + j));
      if (!img.injective) continue;
      EXPECT_TRUE(certify(img, j).invariants_trivial);
    }
  }
  EXPECT_EQ(flat, 10);
}

TEST(Properties, FixtureLoopsThroughBothFlapsAreNotInjective) {
  const Folding f = improper_fixture();
  for (const PaperLoop& loop : hand_routed_loops()) {
    ASSERT_NO_THROW(validate_loop(loop));
    ASSERT_TRUE(touches_both_flaps(loop));
    EXPECT_FALSE(fold_loop(f, loop).injective);
  }
  int both = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const PaperLoop loop = random_loop(seed);
    const SpatialPolyline img = fold_loop(f, loop);
    if (touches_both_flaps(loop)) {
      ++both;
      EXPECT_FALSE(img.injective) << "seed " << seed;
    }
    if (img.injective) EXPECT_TRUE(certify(img, seed).invariants_trivial) << "seed " << seed;
  }
  EXPECT_GT(both, 20);
}

}  // namespace
}  // namespace orikami
