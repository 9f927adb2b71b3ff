#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "orikami/error.hpp"
#include "orikami/folding.hpp"
#include "orikami/generators.hpp"

namespace orikami {
namespace {

constexpr double kPi = std::numbers::pi;

double total_area(const CreasePattern& cp) {
  double a = 0.0;
  for (int f = 0; f < static_cast<int>(cp.faces.size()); ++f) a += cp.face_area(f);
  return a;
}

Folding book_fold(double theta) { return single_crease(theta, {{0.5, 0.0}, {0.0, 1.0}}); }

PaperLoop square_loop(double lo, double hi) {
  return {{{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}};
}

TEST(BuildPattern, NoCreases) {
  const CreasePattern cp = build_pattern({}, {});
  EXPECT_EQ(cp.faces.size(), 1u);
  EXPECT_EQ(cp.vertices.size(), 4u);
  EXPECT_NEAR(total_area(cp), 1.0, 1e-12);
}

TEST(BuildPattern, VerticalCrease) {
  const CreasePattern cp = build_pattern({{0.5, 0.0}, {0.5, 1.0}}, {{0, 1}});
  EXPECT_EQ(cp.faces.size(), 2u);
  EXPECT_EQ(cp.crease_edges.size(), 1u);
  EXPECT_NEAR(cp.face_area(0), 0.5, 1e-12);
  EXPECT_NEAR(cp.face_area(1), 0.5, 1e-12);
  EXPECT_EQ(cp.faces_of_crease(0).size(), 2u);
  EXPECT_TRUE(cp.faces_adjacent(0, 1));
}

TEST(BuildPattern, FiveRaysFromCentre) {
  std::vector<Vec2> v{{0.5, 0.5}, {0.5, 1.0}, {0.0, 0.6}, {0.2, 0.0}, {0.8, 0.0}, {1.0, 0.6}};
  std::vector<Edge> e;
  for (int i = 1; i <= 5; ++i) e.push_back({0, i});
  const CreasePattern cp = build_pattern(v, e);
  EXPECT_EQ(cp.faces.size(), 5u);
  EXPECT_EQ(cp.crease_edges.size(), 5u);
  EXPECT_NEAR(total_area(cp), 1.0, 1e-12);
  for (int f = 0; f < 5; ++f) EXPECT_GT(signed_area(cp.face_polygon(f)), 0.0);
}

TEST(BuildPattern, Errors) {
  EXPECT_THROW(build_pattern({{1.2, 0.5}, {0.5, 0.5}}, {{0, 1}}), DomainError);
  EXPECT_THROW(build_pattern({{0.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}}, {{0, 1}, {2, 3}}),
               NonPlanarError);
}

TEST(BuildPattern, AreasPartitionSquare) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Folding f = simple_fold_sequence(seed, 1 + static_cast<int>(seed % kMaxSimpleFolds));
    EXPECT_NEAR(total_area(f.pattern), 1.0, kDefaultTolerance.geom);
  }
}

TEST(ValidateFolding, Identity) {
  const ValidationReport r = validate_folding(Folding::identity(), true);
  EXPECT_TRUE(r.valid());
  EXPECT_EQ(r.max_face_defect, 0.0);
  EXPECT_EQ(r.max_crease_defect, 0.0);
}

TEST(ValidateFolding, BookFold) {
  EXPECT_TRUE(validate_folding(book_fold(kPi / 2), true).valid());
}

TEST(ValidateFolding, SpuriousCreaseInStrictMode) {
  const CreasePattern cp = build_pattern({{0.5, 0.0}, {0.5, 1.0}}, {{0, 1}});
  const Folding flat(cp, {RigidEmbedding::identity(), RigidEmbedding::identity()});
  EXPECT_TRUE(validate_folding(flat, false).valid());
  const ValidationReport strict = validate_folding(flat, true);
  EXPECT_FALSE(strict.valid());
  EXPECT_EQ(strict.spurious_creases, std::vector<int>{0});
}

TEST(ValidateFolding, TornPaper) {
  const CreasePattern cp = build_pattern({{0.5, 0.0}, {0.5, 1.0}}, {{0, 1}});
  RigidEmbedding shifted;
  shifted.translation = {0.0, 0.0, 0.1};
  const ValidationReport r =
      validate_folding(Folding(cp, {RigidEmbedding::identity(), shifted}), false);
  EXPECT_FALSE(r.valid());
  ASSERT_EQ(r.crease_defects.size(), 1u);
  EXPECT_NEAR(r.crease_defects[0].defect, 0.1, 1e-12);
}

TEST(ValidateFolding, StretchedFace) {
  RigidEmbedding e;
  e.col_x = {1.1, 0.0, 0.0};
  const ValidationReport r = validate_folding(Folding(build_pattern({}, {}), {e}), false);
  EXPECT_FALSE(r.valid());
  ASSERT_EQ(r.face_defects.size(), 1u);
}

TEST(CreaseEdgeCount, Examples) {
  EXPECT_EQ(crease_edge_count(Folding::identity()), 0);
  EXPECT_EQ(crease_edge_count(book_fold(1.0)), 1);
  // A vertex in the middle of a crease splits it into two edges.
  const CreasePattern cp =
      build_pattern({{0.5, 0.0}, {0.5, 0.5}, {0.5, 1.0}}, {{0, 1}, {1, 2}});
  EXPECT_EQ(crease_edge_count(Folding(cp, {RigidEmbedding::identity(), RigidEmbedding::identity()})),
            2);
}

TEST(FoldPoint, Identity) {
  const Vec3 p = fold_point(Folding::identity(), {0.3, 0.7});
  EXPECT_EQ(p, (Vec3{0.3, 0.7, 0.0}));
}

TEST(FoldPoint, BookFoldQuarterTurn) {
  const Vec3 p = fold_point(book_fold(kPi / 2), {0.75, 0.5});
  EXPECT_NEAR(p.x, 0.5, 1e-12);
  EXPECT_NEAR(p.y, 0.5, 1e-12);
  EXPECT_NEAR(p.z, 0.25, 1e-12);
}

TEST(FoldPoint, OutsideSquareThrows) {
  EXPECT_THROW(fold_point(Folding::identity(), {1.5, 0.5}), DomainError);
}

TEST(FoldPoint, CreaseAgreement) {
  const Folding f = book_fold(2.0);
  const Vec2 on{0.5, 0.3};
  ASSERT_EQ(f.pattern.faces.size(), 2u);
  const Vec3 a = f.face_maps[0].apply(on);
  const Vec3 b = f.face_maps[1].apply(on);
  EXPECT_LE(distance(a, b), kDefaultTolerance.iso);
  EXPECT_LE(distance(fold_point(f, on), a), kDefaultTolerance.iso);
}

TEST(FoldPoint, ContinuousAcrossCreases) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Folding f = simple_fold_sequence(seed, 3);
    for (int c = 0; c < static_cast<int>(f.pattern.crease_edges.size()); ++c) {
      const auto [i, j] = f.pattern.crease_edges[c];
      const Vec2 a = f.pattern.vertices[i], b = f.pattern.vertices[j];
      const Vec2 m = a + (b - a) * (0.2 + 0.6 * u(rng));
      const Vec2 n = normalized(Vec2{-(b - a).y, (b - a).x});
      const double delta = 1e-4;
      const Vec2 p = m + n * (delta / 2), q = m - n * (delta / 2);
      EXPECT_LE(distance(fold_point(f, p), fold_point(f, q)), delta + kDefaultTolerance.iso);
    }
  }
}

TEST(FoldLoop, IdentityIsPlanarCopy) {
  const PaperLoop loop = square_loop(0.2, 0.8);
  const SpatialPolyline poly = fold_loop(Folding::identity(), loop);
  EXPECT_TRUE(poly.injective);
  ASSERT_EQ(poly.waypoints.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(poly.waypoints[i], (Vec3{loop.waypoints[i].x, loop.waypoints[i].y, 0.0}));
  }
}

TEST(FoldLoop, SubdividesAtCreases) {
  const SpatialPolyline poly = fold_loop(book_fold(kPi / 2), square_loop(0.2, 0.8));
  EXPECT_EQ(poly.waypoints.size(), 6u);
  EXPECT_TRUE(poly.injective);
}

TEST(FoldLoop, FlatFoldIsNotInjective) {
  const SpatialPolyline poly = fold_loop(book_fold(kPi), square_loop(0.3, 0.7));
  EXPECT_FALSE(poly.injective);
}

TEST(FoldLoop, WaypointsOnCrease) {
  const PaperLoop loop{{{0.5, 0.2}, {0.8, 0.5}, {0.5, 0.8}, {0.2, 0.5}}};
  const SpatialPolyline poly = fold_loop(book_fold(kPi / 2), loop);
  EXPECT_TRUE(poly.injective);
  EXPECT_NEAR(poly.length(), loop.length(), 1e-12);
}

TEST(FoldLoop, LengthPreserved) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Folding f = simple_fold_sequence(seed, 1 + static_cast<int>(seed % kMaxSimpleFolds));
    const PaperLoop loop = random_loop(seed + 1000, 6 + static_cast<int>(seed % 7));
    const SpatialPolyline poly = fold_loop(f, loop);
    const double bound = 10 * kDefaultTolerance.iso * static_cast<double>(loop.waypoints.size());
    EXPECT_NEAR(poly.length(), loop.length(), bound) << "seed " << seed;
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(ValidateLoop, RejectsBadLoops) {
  EXPECT_NO_THROW(validate_loop(square_loop(0.1, 0.9)));
  EXPECT_THROW(validate_loop({{{0.1, 0.1}, {0.9, 0.9}}}), DomainError);
  EXPECT_THROW(validate_loop({{{0.1, 0.1}, {0.9, 0.1}, {1.2, 0.5}}}), DomainError);
  // Bow tie.
  EXPECT_THROW(validate_loop({{{0.1, 0.1}, {0.9, 0.9}, {0.9, 0.1}, {0.1, 0.9}}}), DomainError);
}

TEST(PolylineInjective, Examples) {
  const std::vector<Vec3> sq{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  EXPECT_TRUE(polyline_is_injective(sq));
  const std::vector<Vec3> bow{{0, 0, 0}, {1, 1, 0}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_FALSE(polyline_is_injective(bow));
  const std::vector<Vec3> lifted{{0, 0, 0}, {1, 1, 0.1}, {1, 0, 0}, {0, 1, 0}};
  EXPECT_TRUE(polyline_is_injective(lifted));
}

}  // namespace
}  // namespace orikami
