#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace orikami {

/// Absolute tolerances used by every geometric predicate.
struct Tolerance {
  double iso = 1e-9;    // isometry defect
  double geom = 1e-9;   // coincidence / incidence
  double angle = 1e-9;  // angle-sum residual

  /// Scale all three jointly; used by the CLI's --tolerance flag.
  Tolerance scaled(double factor) const;
  bool valid() const noexcept;
};

inline constexpr Tolerance kDefaultTolerance{};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr bool operator==(const Vec2&) const = default;
  double norm() const { return std::hypot(x, y); }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr bool operator==(const Vec3&) const = default;
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr Vec3 operator*(double s, Vec3 v) { return v * s; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline double distance(Vec3 a, Vec3 b) { return (a - b).norm(); }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }
inline bool is_finite(Vec3 v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Unit vector; throws DegenerateError below `eps`.
Vec3 normalized(Vec3 v, double eps = kDefaultTolerance.geom);
Vec2 normalized(Vec2 v, double eps = kDefaultTolerance.geom);

/// Unsigned angle in [0, pi]. Throws DegenerateError for (near) zero input.
double angle_between(Vec3 u, Vec3 v, const Tolerance& tol = kDefaultTolerance);

struct Segment2 {
  Vec2 a;
  Vec2 b;
  double length() const { return distance(a, b); }
  Vec2 at(double t) const { return a + (b - a) * t; }
};

struct Segment3 {
  Vec3 a;
  Vec3 b;
  Vec3 at(double t) const { return a + (b - a) * t; }
};

namespace intersection {
struct None {};
struct Point {
  double t_a;
  double t_b;
  Vec2 p;
};
/// Collinear overlap. Parameters are along the first segment.
struct Overlap {
  double t_begin;
  double t_end;
  Segment2 interval;
};
/// Tangential or otherwise ambiguous contact within tolerance.
struct Degenerate {};
}  // namespace intersection

using SegmentIntersection = std::variant<intersection::None, intersection::Point,
                                         intersection::Overlap, intersection::Degenerate>;

/// Classifies the intersection of two segments. Total: never throws.
SegmentIntersection segment_intersect(const Segment2& a, const Segment2& b,
                                      const Tolerance& tol = kDefaultTolerance);

double point_segment_distance(Vec2 p, const Segment2& s);
double point_segment_distance(Vec3 p, const Segment3& s);

/// Closest distance between two 3D segments.
double segment_segment_distance(const Segment3& a, const Segment3& b);

double signed_area(std::span<const Vec2> polygon);

/// Point-in-polygon by winding number. Points within `eps` of the boundary count
/// as inside.
bool polygon_contains(std::span<const Vec2> polygon, Vec2 p, double eps);

/// Per-face isometric embedding of the plane: p -> L p + t, L a 3x2 matrix
/// stored by columns.
struct RigidEmbedding {
  Vec3 col_x{1, 0, 0};
  Vec3 col_y{0, 1, 0};
  Vec3 translation{};

  static RigidEmbedding identity() { return {}; }

  Vec3 apply(Vec2 p) const { return col_x * p.x + col_y * p.y + translation; }
  Vec3 apply_linear(Vec2 v) const { return col_x * v.x + col_y * v.y; }

  /// Largest deviation of the columns from an orthonormal pair.
  double orthonormality_defect() const;
  bool is_rigid(const Tolerance& tol = kDefaultTolerance) const {
    return orthonormality_defect() <= tol.iso;
  }
  /// Max-norm distance between the parameters of two embeddings.
  double distance_to(const RigidEmbedding& other) const;
};

/// Rigid embedding mapping src[i] to dst[i]. The triangles must be congruent.
RigidEmbedding embedding_from_triangles(const std::array<Vec2, 3>& src,
                                        const std::array<Vec3, 3>& dst,
                                        const Tolerance& tol = kDefaultTolerance);

/// Rotation of `p` about the axis through `origin` with unit direction `axis`.
Vec3 rotate_about_axis(Vec3 p, Vec3 origin, Vec3 axis, double angle);

/// True when orthogonal projection along `direction` maps the closed polyline
/// to a regular diagram: no segment collapses, no vertex lands on another
/// segment, no two segments overlap, and no three segments share a point.
bool is_regular_projection(std::span<const Vec3> closed_polyline, Vec3 direction,
                           const Tolerance& tol = kDefaultTolerance);

/// Deterministic generic projection direction for a closed polyline.
/// Throws NonGenericError after `max_attempts` rejected samples.
Vec3 generic_direction(std::span<const Vec3> closed_polyline, std::uint64_t seed,
                       const Tolerance& tol = kDefaultTolerance, int max_attempts = 1000);

/// Right-handed orthonormal basis (e1, e2) with e1 x e2 = direction.
std::pair<Vec3, Vec3> projection_basis(Vec3 direction);

}  // namespace orikami
