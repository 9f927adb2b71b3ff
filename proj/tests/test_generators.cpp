#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "orikami/analysis.hpp"
#include "orikami/error.hpp"
#include "orikami/generators.hpp"
#include "orikami/knotid.hpp"

namespace orikami {
namespace {

constexpr double kPi = std::numbers::pi;

LaurentPolynomial alternating(int terms) {
  std::vector<std::int64_t> c(terms);
  for (int k = 0; k < terms; ++k) c[k] = k % 2 == 0 ? 1 : -1;
  return LaurentPolynomial(0, c);
}

class TorusFamily : public ::testing::TestWithParam<int> {};

TEST_P(TorusFamily, TwoCreasesAndDeterminant) {
  const int n = GetParam();
  const auto [f, loop] = torus_folding({.n = n});
  EXPECT_EQ(crease_edge_count(f), 2);
  EXPECT_TRUE(validate_folding(f, true).valid());
  EXPECT_NO_THROW(validate_loop(loop));
  const SpatialPolyline img = fold_loop(f, loop);
  ASSERT_TRUE(img.injective);
  const CertificationReport r = certify(img, 0);
  EXPECT_EQ(r.determinant, 2 * n + 3);
  EXPECT_EQ(r.alexander, alternating(2 * n + 3));
  EXPECT_EQ(oracle::goeritz_determinant(r.pd_code), 2 * n + 3);
}

INSTANTIATE_TEST_SUITE_P(N, TorusFamily, ::testing::Range(0, 7));

TEST(TorusFolding, PanelsAtThirds) {
  const auto [f, loop] = torus_folding({.n = 0});
  ASSERT_EQ(f.pattern.crease_edges.size(), 2u);
  for (auto [a, b] : f.pattern.crease_edges) {
    const Vec2 p = f.pattern.vertices[a], q = f.pattern.vertices[b];
    EXPECT_DOUBLE_EQ(p.x, q.x);
    EXPECT_TRUE(std::abs(p.x - kTorusLeftCrease) < 1e-12 ||
                std::abs(p.x - kTorusRightCrease) < 1e-12);
  }
  // A folding that admits a nontrivial knot cannot be proper: the outer
  // panels pierce each other.
  EXPECT_EQ(properness_verdict(f).verdict, Properness::ImproperTransversal);
}

TEST(TorusFolding, RawDiagramSimplifies) {
  const auto [f, loop] = torus_folding({.n = 1});
  const KnotDiagram raw = diagram_from_polyline(fold_loop(f, loop), 0);
  EXPECT_GE(raw.crossing_count(), 5);
  const KnotDiagram s = simplify(raw);
  EXPECT_GE(s.crossing_count(), 5);
  EXPECT_LE(s.crossing_count(), raw.crossing_count());
  EXPECT_EQ(alexander(s).determinant, 5);
  EXPECT_EQ(alexander(raw).determinant, 5);
  EXPECT_EQ(jones(s), jones(raw));
}

TEST(TorusFolding, RejectsOversizedTeeth) {
  EXPECT_THROW(torus_folding({.n = 40}), Error);
  EXPECT_THROW(torus_folding({.n = -1}), Error);
}

TEST(SingleCrease, Examples) {
  const Line2 axis{{0.5, 0.0}, {0.0, 1.0}};
  const Folding quarter = single_crease(kPi / 2, axis);
  EXPECT_EQ(crease_edge_count(quarter), 1);
  EXPECT_TRUE(is_injective(quarter));
  EXPECT_TRUE(is_injective(single_crease(0.1, axis)));
  const Folding flat = single_crease(kPi, axis);
  EXPECT_FALSE(is_injective(flat));
  for (const auto& x : self_intersections(flat)) {
    EXPECT_NE(x.kind, IntersectionKind::TransversalCrossing);
  }
  EXPECT_THROW(single_crease(1.0, {{2.0, 2.0}, {1.0, 0.0}}), DomainError);
}

TEST(SingleCrease, ObliqueAxes) {
  for (double theta : {0.3, 1.0, 2.0, 3.0}) {
    const Folding f = single_crease(theta, {{0.2, 0.0}, {0.5, 1.0}});
    EXPECT_TRUE(validate_folding(f, true).valid());
    EXPECT_TRUE(is_injective(f));
    const std::vector<double> angles = chord_fold_angles(f);
    ASSERT_EQ(angles.size(), 1u);
    EXPECT_NEAR(std::abs(angles[0]), theta, 1e-9);
  }
}

TEST(SimpleFoldSequence, Examples) {
  const Folding zero = simple_fold_sequence(7, 0);
  EXPECT_EQ(crease_edge_count(zero), 0);
  EXPECT_TRUE(is_injective(zero));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Folding one = simple_fold_sequence(seed, 1);
    EXPECT_EQ(crease_edge_count(one), 1);
    EXPECT_TRUE(is_injective(one));
  }
  EXPECT_TRUE(is_injective(simple_fold_sequence(42, 3)));
}

TEST(SimpleFoldSequence, InjectiveAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int k = static_cast<int>(seed % (kMaxSimpleFolds + 1));
    const Folding f = simple_fold_sequence(seed, k);
    EXPECT_TRUE(is_injective(f)) << "seed " << seed;
    EXPECT_TRUE(is_chord_pattern(f.pattern));
    EXPECT_TRUE(validate_folding(f, true).valid());
    const Folding g = simple_fold_sequence(seed, k);
    ASSERT_EQ(f.face_maps.size(), g.face_maps.size());
    for (std::size_t i = 0; i < f.face_maps.size(); ++i) {
      EXPECT_EQ(f.face_maps[i].distance_to(g.face_maps[i]), 0.0);
    }
    for (double a : chord_fold_angles(f)) {
      EXPECT_GT(std::abs(a), 0.1 - 1e-9);
      EXPECT_LT(std::abs(a), kPi - 0.1 + 1e-9);
    }
  }
  EXPECT_THROW(simple_fold_sequence(0, kMaxSimpleFolds + 1), Error);
}

TEST(FoldAlongChords, RejectsInteriorVertices) {
  const CreasePattern cp =
      build_pattern({{0.5, 0.5}, {0.5, 0.0}, {0.0, 0.5}}, {{0, 1}, {0, 2}});
  EXPECT_FALSE(is_chord_pattern(cp));
  EXPECT_THROW(fold_along_chords(cp, {1.0, 1.0}), DomainError);
}

TEST(RandomLoop, SimpleAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PaperLoop a = random_loop(seed, 3 + static_cast<int>(seed % 10));
    EXPECT_NO_THROW(validate_loop(a));
    const PaperLoop b = random_loop(seed, 3 + static_cast<int>(seed % 10));
    EXPECT_EQ(a.waypoints, b.waypoints);
  }
}

TEST(ImproperFixture, Validates) {
  const Folding f = improper_fixture();
  EXPECT_TRUE(validate_folding(f, true).valid());
  EXPECT_FALSE(is_injective(f));
  bool transversal = false;
  for (const auto& x : self_intersections(f)) {
    transversal |= x.kind == IntersectionKind::TransversalCrossing;
  }
  EXPECT_TRUE(transversal);
}

TEST(ImproperFixture, Regions) {
  EXPECT_TRUE(in_fixture_region_b({0.05, 0.95}));
  EXPECT_FALSE(in_fixture_region_b({0.95, 0.05}));
  EXPECT_TRUE(in_fixture_region_c({0.95, 0.05}));
  EXPECT_FALSE(in_fixture_region_c({0.05, 0.95}));
  EXPECT_FALSE(in_fixture_region_b({0.5, 0.5}));
  EXPECT_FALSE(in_fixture_region_c({0.5, 0.5}));
}

TEST(ImproperFixture, RestrictionsValidate) {
  for (char strip : {'B', 'C'}) {
    const Folding f = improper_fixture_without(strip);
    EXPECT_TRUE(validate_folding(f, true).valid());
    for (const auto& x : self_intersections(f)) {
      EXPECT_NE(x.kind, IntersectionKind::TransversalCrossing) << strip;
    }
  }
  EXPECT_THROW(improper_fixture_without('A'), DomainError);
}

}  // namespace
}  // namespace orikami
