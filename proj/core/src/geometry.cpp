#include "orikami/geometry.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "orikami/error.hpp"

namespace orikami {

Tolerance Tolerance::scaled(double factor) const {
  return {iso * factor, geom * factor, angle * factor};
}

bool Tolerance::valid() const noexcept {
  auto ok = [](double t) { return t > 0.0 && t < 1e-3; };
  return ok(iso) && ok(geom) && ok(angle);
}

Vec3 normalized(Vec3 v, double eps) {
  const double n = v.norm();
  if (!(n > eps)) throw DegenerateError("cannot normalize a zero-length vector");
  return v * (1.0 / n);
}

Vec2 normalized(Vec2 v, double eps) {
  const double n = v.norm();
  if (!(n > eps)) throw DegenerateError("cannot normalize a zero-length vector");
  return v * (1.0 / n);
}

double angle_between(Vec3 u, Vec3 v, const Tolerance& tol) {
  const double nu = u.norm();
  const double nv = v.norm();
  if (!(nu > tol.geom) || !(nv > tol.geom)) {
    throw DegenerateError("angle_between: degenerate vector");
  }
  // atan2 keeps full precision near 0 and pi, where acos of the clamped
  // cosine loses about half the significant digits.
  const Vec3 a = u * (1.0 / nu);
  const Vec3 b = v * (1.0 / nv);
  return std::atan2(cross(a, b).norm(), std::clamp(dot(a, b), -1.0, 1.0));
}

SegmentIntersection segment_intersect(const Segment2& a, const Segment2& b,
                                      const Tolerance& tol) {
  const Vec2 r = a.b - a.a;
  const Vec2 s = b.b - b.a;
  const double lr = r.norm();
  const double ls = s.norm();
  if (!(lr > tol.geom) || !(ls > tol.geom)) return intersection::Degenerate{};

  const Vec2 qp = b.a - a.a;
  const double denom = cross(r, s);
  const double sin_angle = denom / (lr * ls);

  if (std::abs(sin_angle) <= tol.geom) {
    // Parallel. Distances of b's endpoints from the supporting line of a.
    const double d0 = std::abs(cross(r, b.a - a.a)) / lr;
    const double d1 = std::abs(cross(r, b.b - a.a)) / lr;
    const double t0 = dot(b.a - a.a, r) / (lr * lr);
    const double t1 = dot(b.b - a.a, r) / (lr * lr);
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(1.0, std::max(t0, t1));
    const double slack = tol.geom / lr;
    if (hi < lo - slack) return intersection::None{};
    if (d0 > tol.geom && d1 > tol.geom) return intersection::None{};
    if (d0 > tol.geom || d1 > tol.geom) return intersection::Degenerate{};
    if ((hi - lo) * lr <= tol.geom) {
      // Collinear segments touching end to end.
      const double t = std::clamp(0.5 * (lo + hi), 0.0, 1.0);
      const Vec2 p = a.at(t);
      const double u = std::clamp(dot(p - b.a, s) / (ls * ls), 0.0, 1.0);
      return intersection::Point{t, u, p};
    }
    return intersection::Overlap{lo, hi, Segment2{a.at(lo), a.at(hi)}};
  }

  const double t = cross(qp, s) / denom;
  const double u = cross(qp, r) / denom;
  const double ta = tol.geom / lr;
  const double tb = tol.geom / ls;
  if (t < -ta || t > 1.0 + ta || u < -tb || u > 1.0 + tb) return intersection::None{};
  const double tc = std::clamp(t, 0.0, 1.0);
  const double uc = std::clamp(u, 0.0, 1.0);
  return intersection::Point{tc, uc, a.at(tc)};
}

double point_segment_distance(Vec2 p, const Segment2& s) {
  const Vec2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.at(t));
}

double point_segment_distance(Vec3 p, const Segment3& s) {
  const Vec3 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return distance(p, s.at(t));
}

double segment_segment_distance(const Segment3& s1, const Segment3& s2) {
  const Vec3 d1 = s1.b - s1.a;
  const Vec3 d2 = s2.b - s2.a;
  const Vec3 r = s1.a - s2.a;
  const double a = dot(d1, d1);
  const double e = dot(d2, d2);
  const double f = dot(d2, r);
  constexpr double kTiny = 1e-300;
  double s = 0.0;
  double t = 0.0;
  if (a <= kTiny && e <= kTiny) return distance(s1.a, s2.a);
  if (a <= kTiny) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e <= kTiny) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      s = denom > 1e-18 * a * e ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  double best = distance(s1.at(s), s2.at(t));
  // Endpoint checks guard the near-parallel branch.
  best = std::min({best, point_segment_distance(s1.a, s2), point_segment_distance(s1.b, s2),
                   point_segment_distance(s2.a, s1), point_segment_distance(s2.b, s1)});
  return best;
}

double signed_area(std::span<const Vec2> polygon) {
  double acc = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc += cross(polygon[i], polygon[(i + 1) % n]);
  }
  return 0.5 * acc;
}

bool polygon_contains(std::span<const Vec2> polygon, Vec2 p, double eps) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = polygon[i];
    const Vec2 b = polygon[(i + 1) % n];
    if (point_segment_distance(p, Segment2{a, b}) <= eps) return true;
    if (a.y <= p.y) {
      if (b.y > p.y && cross(b - a, p - a) > 0) ++winding;
    } else if (b.y <= p.y && cross(b - a, p - a) < 0) {
      --winding;
    }
  }
  return winding != 0;
}

double RigidEmbedding::orthonormality_defect() const {
  return std::max({std::abs(col_x.norm() - 1.0), std::abs(col_y.norm() - 1.0),
                   std::abs(dot(col_x, col_y))});
}

double RigidEmbedding::distance_to(const RigidEmbedding& o) const {
  auto m = [](Vec3 a, Vec3 b) {
    const Vec3 d = a - b;
    return std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z)});
  };
  return std::max({m(col_x, o.col_x), m(col_y, o.col_y), m(translation, o.translation)});
}

RigidEmbedding embedding_from_triangles(const std::array<Vec2, 3>& src,
                                        const std::array<Vec3, 3>& dst,
                                        const Tolerance& tol) {
  const Vec2 s1 = src[1] - src[0];
  const Vec2 s2 = src[2] - src[0];
  const double det = cross(s1, s2);
  if (!(std::abs(det) > tol.geom)) {
    throw DegenerateError("embedding_from_triangles: source triangle is degenerate");
  }

  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    worst = std::max(worst, std::abs(distance(src[i], src[j]) - distance(dst[i], dst[j])));
  }
  if (worst > tol.iso) {
    throw CongruenceError("embedding_from_triangles: triangles are not congruent (defect " +
                              std::to_string(worst) + ")",
                          worst);
  }

  // L = D S^-1, then snap L to the nearest matrix with orthonormal columns
  // (polar factor) so the result is exactly rigid up to rounding.
  const Vec3 d1 = dst[1] - dst[0];
  const Vec3 d2 = dst[2] - dst[0];
  const double inv = 1.0 / det;
  Vec3 cx = (d1 * s2.y - d2 * s1.y) * inv;
  Vec3 cy = (d2 * s1.x - d1 * s2.x) * inv;

  // G = L^T L; polar factor U = L G^{-1/2}.
  const double g11 = dot(cx, cx);
  const double g12 = dot(cx, cy);
  const double g22 = dot(cy, cy);
  const double gdet = g11 * g22 - g12 * g12;
  if (!(gdet > 0.0)) throw DegenerateError("embedding_from_triangles: degenerate image");
  const double sdet = std::sqrt(gdet);
  const double st = std::sqrt(g11 + g22 + 2.0 * sdet);
  // sqrt(G) = (G + sqrt(det G) I) / st ; invert the 2x2 symmetric matrix.
  const double r11 = (g11 + sdet) / st;
  const double r12 = g12 / st;
  const double r22 = (g22 + sdet) / st;
  const double rdet = r11 * r22 - r12 * r12;
  const double i11 = r22 / rdet;
  const double i12 = -r12 / rdet;
  const double i22 = r11 / rdet;
  const Vec3 ux = cx * i11 + cy * i12;
  const Vec3 uy = cx * i12 + cy * i22;

  RigidEmbedding e;
  e.col_x = ux;
  e.col_y = uy;
  const Vec2 sc = (src[0] + src[1] + src[2]) * (1.0 / 3.0);
  const Vec3 dc = (dst[0] + dst[1] + dst[2]) * (1.0 / 3.0);
  e.translation = dc - e.apply_linear(sc);

  double fit = 0.0;
  for (int i = 0; i < 3; ++i) fit = std::max(fit, distance(e.apply(src[i]), dst[i]));
  if (fit > 10.0 * tol.iso) {
    throw CongruenceError("embedding_from_triangles: no rigid map within tolerance (defect " +
                              std::to_string(fit) + ")",
                          fit);
  }
  return e;
}

Vec3 rotate_about_axis(Vec3 p, Vec3 origin, Vec3 axis, double angle) {
  const Vec3 k = normalized(axis);
  const Vec3 v = p - origin;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Vec3 rotated = v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c));
  return origin + rotated;
}

std::pair<Vec3, Vec3> projection_basis(Vec3 direction) {
  const Vec3 d = normalized(direction);
  const Vec3 helper = std::abs(d.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 e1 = normalized(cross(helper, d));
  const Vec3 e2 = cross(d, e1);
  return {e1, e2};
}

bool is_regular_projection(std::span<const Vec3> pts, Vec3 direction, const Tolerance& tol) {
  const std::size_t n = pts.size();
  if (n < 2) return false;
  const auto [e1, e2] = projection_basis(direction);
  std::vector<Vec2> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = {dot(pts[i], e1), dot(pts[i], e2)};

  const std::size_t m = n == 2 ? 1 : n;  // a 2-point "polyline" is a single segment
  auto seg = [&](std::size_t i) { return Segment2{p[i], p[(i + 1) % n]}; };

  for (std::size_t i = 0; i < m; ++i) {
    if (!(seg(i).length() > tol.geom)) return false;
  }
  // Consecutive segments must not fold back onto each other.
  if (m > 1) {
    for (std::size_t i = 0; i < m; ++i) {
      const Vec2 u = p[(i + 1) % n] - p[i];
      const Vec2 v = p[(i + 2) % n] - p[(i + 1) % n];
      if (std::abs(cross(u, v)) <= tol.geom * u.norm() * v.norm() && dot(u, v) < 0) {
        return false;
      }
    }
  }
  // No vertex on a non-incident segment.
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i == v || (i + 1) % n == v) continue;
      if (point_segment_distance(p[v], seg(i)) <= tol.geom) return false;
    }
  }
  std::vector<Vec2> crossings;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (j == i + 1 || (i == 0 && j == m - 1 && m > 2)) continue;
      const auto r = segment_intersect(seg(i), seg(j), tol);
      if (std::holds_alternative<intersection::Overlap>(r) ||
          std::holds_alternative<intersection::Degenerate>(r)) {
        return false;
      }
      if (const auto* pt = std::get_if<intersection::Point>(&r)) crossings.push_back(pt->p);
    }
  }
  for (std::size_t i = 0; i < crossings.size(); ++i) {
    for (std::size_t j = i + 1; j < crossings.size(); ++j) {
      if (distance(crossings[i], crossings[j]) <= tol.geom) return false;
    }
  }
  return true;
}

Vec3 generic_direction(std::span<const Vec3> pts, std::uint64_t seed, const Tolerance& tol,
                       int max_attempts) {
  if (pts.size() < 2) throw DegenerateError("generic_direction: need at least two points");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    if (v.norm() < 1e-6) continue;
    const Vec3 d = normalized(v);
    if (is_regular_projection(pts, d, tol)) return d;
  }
  throw NonGenericError("generic_direction: no regular projection found after " +
                        std::to_string(max_attempts) + " attempts");
}

}  // namespace orikami
