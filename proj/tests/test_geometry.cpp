#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "orikami/error.hpp"
#include "orikami/geometry.hpp"

namespace orikami {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_near(Vec3 a, Vec3 b, double eps) {
  EXPECT_NEAR(a.x, b.x, eps);
  EXPECT_NEAR(a.y, b.y, eps);
  EXPECT_NEAR(a.z, b.z, eps);
}

TEST(AngleBetween, Examples) {
  EXPECT_NEAR(angle_between({1, 0, 0}, {0, 1, 0}), kPi / 2, 1e-12);
  EXPECT_NEAR(angle_between({1, 2, 3}, {1, 2, 3}), 0.0, 1e-12);
  EXPECT_NEAR(angle_between({1, 0, 0}, {-1, 0, 0}), kPi, 1e-12);
}

TEST(AngleBetween, ZeroVectorThrows) {
  EXPECT_THROW(angle_between({0, 0, 0}, {1, 0, 0}), DegenerateError);
  EXPECT_THROW(angle_between({1, 0, 0}, {1e-12, 0, 0}), DegenerateError);
}

TEST(AngleBetween, SymmetricAndScaleInvariant) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> s(0.01, 100.0);
  for (int i = 0; i < 500; ++i) {
    const Vec3 a{u(rng), u(rng), u(rng)};
    const Vec3 b{u(rng), u(rng), u(rng)};
    const double lambda = s(rng);
    EXPECT_NEAR(angle_between(a, b), angle_between(b, a), 1e-9);
    EXPECT_NEAR(angle_between(a * lambda, b), angle_between(a, b), 1e-9);
    EXPECT_NEAR(angle_between(a, b * lambda), angle_between(a, b), 1e-9);
  }
}

TEST(SegmentIntersect, SymmetricX) {
  const auto r = segment_intersect({{0, 0}, {1, 1}}, {{0, 1}, {1, 0}});
  const auto* p = std::get_if<intersection::Point>(&r);
  ASSERT_NE(p, nullptr);
  EXPECT_NEAR(p->t_a, 0.5, 1e-12);
  EXPECT_NEAR(p->t_b, 0.5, 1e-12);
  EXPECT_NEAR(p->p.x, 0.5, 1e-12);
  EXPECT_NEAR(p->p.y, 0.5, 1e-12);
}

TEST(SegmentIntersect, ParallelDisjoint) {
  const auto r = segment_intersect({{0, 0}, {1, 0}}, {{0, 1}, {1, 1}});
  EXPECT_TRUE(std::holds_alternative<intersection::None>(r));
}

TEST(SegmentIntersect, CollinearOverlap) {
  const auto r = segment_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}});
  const auto* o = std::get_if<intersection::Overlap>(&r);
  ASSERT_NE(o, nullptr);
  EXPECT_NEAR(o->t_begin, 0.5, 1e-12);
  EXPECT_NEAR(o->t_end, 1.0, 1e-12);
  EXPECT_NEAR(std::min(o->interval.a.x, o->interval.b.x), 1.0, 1e-12);
  EXPECT_NEAR(std::max(o->interval.a.x, o->interval.b.x), 2.0, 1e-12);
  EXPECT_NEAR(o->interval.a.y, 0.0, 1e-12);
}

TEST(SegmentIntersect, TouchingEndpointIsNotSilentlyResolved) {
  // T-junction within tolerance: reported as a point at the end parameter or
  // as Degenerate, never as None.
  const auto r = segment_intersect({{0, 0}, {1, 0}}, {{0.5, 0}, {0.5, 1}});
  EXPECT_FALSE(std::holds_alternative<intersection::None>(r));
}

TEST(SegmentIntersect, SymmetricUpToSwap) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int points = 0;
  for (int i = 0; i < 2000; ++i) {
    const Segment2 a{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const Segment2 b{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const auto ab = segment_intersect(a, b);
    const auto ba = segment_intersect(b, a);
    ASSERT_EQ(ab.index(), ba.index());
    if (const auto* p = std::get_if<intersection::Point>(&ab)) {
      const auto* q = std::get_if<intersection::Point>(&ba);
      EXPECT_NEAR(p->t_a, q->t_b, 1e-9);
      EXPECT_NEAR(p->t_b, q->t_a, 1e-9);
      EXPECT_NEAR(distance(p->p, q->p), 0.0, 1e-9);
      ++points;
    }
  }
  EXPECT_GT(points, 100);
}

TEST(EmbeddingFromTriangles, Identity) {
  const RigidEmbedding e = embedding_from_triangles({Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}},
                                                    {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}});
  EXPECT_LE(e.distance_to(RigidEmbedding::identity()), 1e-12);
}

TEST(EmbeddingFromTriangles, TiltAboutXAxis) {
  const RigidEmbedding e = embedding_from_triangles({Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}},
                                                    {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 1}});
  expect_near(e.col_x, {1, 0, 0}, 1e-12);
  expect_near(e.col_y, {0, 0, 1}, 1e-12);
  expect_near(e.apply({0.3, 0.7}), {0.3, 0, 0.7}, 1e-12);
  EXPECT_TRUE(e.is_rigid());
}

TEST(EmbeddingFromTriangles, NonCongruentReportsDefect) {
  try {
    embedding_from_triangles({Vec2{0, 0}, Vec2{2, 0}, Vec2{0, 1}},
                             {Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}});
    FAIL() << "expected CongruenceError";
  } catch (const CongruenceError& e) {
    EXPECT_NEAR(e.defect(), 1.0, 1e-9);
  }
}

TEST(RigidEmbedding, PreservesDistances) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  for (int i = 0; i < 200; ++i) {
    const std::array<Vec2, 3> src{Vec2{u(rng), u(rng)}, Vec2{u(rng), u(rng)},
                                  Vec2{u(rng), u(rng)}};
    if (std::abs(cross(src[1] - src[0], src[2] - src[0])) < 1e-3) continue;
    const Vec3 axis = normalized(Vec3{u(rng), u(rng), u(rng)});
    const double a = ang(rng);
    const Vec3 shift{u(rng), u(rng), u(rng)};
    std::array<Vec3, 3> dst;
    for (int k = 0; k < 3; ++k) {
      dst[k] = rotate_about_axis({src[k].x, src[k].y, 0}, {0, 0, 0}, axis, a) + shift;
    }
    const RigidEmbedding e = embedding_from_triangles(src, dst);
    for (int k = 0; k < 3; ++k) expect_near(e.apply(src[k]), dst[k], 1e-9);
    for (int j = 0; j < 10; ++j) {
      const Vec2 p{u(rng), u(rng)};
      const Vec2 q{u(rng), u(rng)};
      EXPECT_NEAR(distance(e.apply(p), e.apply(q)), distance(p, q), 10 * kDefaultTolerance.iso);
    }
  }
}

TEST(RotateAboutAxis, QuarterTurn) {
  expect_near(rotate_about_axis({1, 0, 0}, {0, 0, 0}, {0, 0, 1}, kPi / 2), {0, 1, 0}, 1e-12);
  expect_near(rotate_about_axis({2, 1, 0}, {1, 1, 0}, {0, 1, 0}, kPi), {0, 1, 0}, 1e-12);
}

TEST(Polygon, AreaAndContainment) {
  const std::vector<Vec2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_NEAR(signed_area(sq), 1.0, 1e-15);
  EXPECT_TRUE(polygon_contains(sq, {0.5, 0.5}, 1e-9));
  EXPECT_TRUE(polygon_contains(sq, {1.0, 0.5}, 1e-9));
  EXPECT_FALSE(polygon_contains(sq, {1.1, 0.5}, 1e-9));
}

TEST(Distances, PointAndSegment) {
  EXPECT_NEAR(point_segment_distance(Vec2{0.5, 1}, Segment2{{0, 0}, {1, 0}}), 1.0, 1e-15);
  EXPECT_NEAR(point_segment_distance(Vec2{2, 0}, Segment2{{0, 0}, {1, 0}}), 1.0, 1e-15);
  EXPECT_NEAR(segment_segment_distance({{0, 0, 0}, {1, 0, 0}}, {{0.5, -1, 1}, {0.5, 1, 1}}), 1.0,
              1e-12);
}

TEST(GenericDirection, SquareHasNonzeroZ) {
  const std::vector<Vec3> sq{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  const Vec3 d = generic_direction(sq, 0);
  EXPECT_NEAR(d.norm(), 1.0, 1e-12);
  EXPECT_GT(std::abs(d.z), 1e-6);
  EXPECT_TRUE(is_regular_projection(sq, d));
}

TEST(GenericDirection, SingleSegment) {
  const std::vector<Vec3> seg{{0, 0, 0}, {1, 2, 3}};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Vec3 d = generic_direction(seg, seed);
    EXPECT_GT(angle_between(d, {1, 2, 3}), 1e-6);
    EXPECT_LT(angle_between(d, {1, 2, 3}), kPi - 1e-6);
  }
}

TEST(GenericDirection, DeterministicInSeed) {
  const std::vector<Vec3> tri{{0, 0, 0}, {1, 0, 0.2}, {0, 1, -0.3}};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(generic_direction(tri, seed), generic_direction(tri, seed));
  }
}

TEST(ProjectionRegularity, AgreesWithExhaustiveCheck) {
  // A planar loop with a vertex placed on another segment is irregular from
  // straight above and regular from a tilted direction.
  const std::vector<Vec3> poly{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0.5, 0, 1}, {0, 1, 0}};
  EXPECT_FALSE(oracle::projection_is_regular(poly, {0, 0, 1}, 1e-9));
  EXPECT_FALSE(is_regular_projection(poly, {0, 0, 1}));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const Vec3 d{u(rng), u(rng), u(rng)};
    if (d.norm() < 0.1) continue;
    const bool lib = is_regular_projection(poly, d);
    if (lib) EXPECT_TRUE(oracle::projection_is_regular(poly, d, 1e-9));
  }
}

TEST(Tolerance, ScaledAndValid) {
  const Tolerance t = kDefaultTolerance.scaled(10.0);
  EXPECT_DOUBLE_EQ(t.geom, 1e-8);
  EXPECT_DOUBLE_EQ(t.iso, 1e-8);
  EXPECT_DOUBLE_EQ(t.angle, 1e-8);
  EXPECT_TRUE(t.valid());
  EXPECT_FALSE((Tolerance{0.0, 1e-9, 1e-9}.valid()));
  EXPECT_FALSE(kDefaultTolerance.scaled(1e7).valid());
}

}  // namespace
}  // namespace orikami
