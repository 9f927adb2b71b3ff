#include "orikami/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "orikami/generators.hpp"

namespace orikami {

namespace {

using Tri2 = std::array<Vec2, 3>;
using Tri3 = std::array<Vec3, 3>;

// Ear clipping; collinear vertices are dropped without emitting a triangle.
std::vector<Tri2> triangulate(std::vector<Vec2> poly) {
  std::vector<Tri2> out;
  auto turn = [&](std::size_t i) {
    const std::size_t n = poly.size();
    const Vec2 a = poly[(i + n - 1) % n];
    const Vec2 b = poly[i];
    const Vec2 c = poly[(i + 1) % n];
    return cross(b - a, c - b);
  };
  while (poly.size() > 3) {
    const std::size_t n = poly.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(turn(i)) <= 1e-15) {
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        clipped = true;
        break;
      }
    }
    if (clipped) continue;
    for (std::size_t i = 0; i < n && !clipped; ++i) {
      if (turn(i) <= 0) continue;
      const Tri2 t{poly[(i + n - 1) % n], poly[i], poly[(i + 1) % n]};
      bool empty = true;
      for (std::size_t k = 0; k < n && empty; ++k) {
        if (k == i || k == (i + 1) % n || k == (i + n - 1) % n) continue;
        const Vec2 p = poly[k];
        empty = !(cross(t[1] - t[0], p - t[0]) >= 0 && cross(t[2] - t[1], p - t[1]) >= 0 &&
                  cross(t[0] - t[2], p - t[2]) >= 0);
      }
      if (!empty) continue;
      out.push_back(t);
      poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
    }
    if (!clipped) break;  // numerically stuck; keep what we have
  }
  if (poly.size() == 3 && std::abs(cross(poly[1] - poly[0], poly[2] - poly[0])) > 1e-15) {
    out.push_back({poly[0], poly[1], poly[2]});
  }
  return out;
}

struct FaceImage {
  std::vector<Vec2> polygon;
  std::vector<Tri2> tris2;
  std::vector<Tri3> tris3;
  RigidEmbedding map;
  Vec3 normal;
  Vec3 lo, hi;  // bounding box

  Vec2 preimage(Vec3 p) const {
    const Vec3 d = p - map.translation;
    return {dot(d, map.col_x), dot(d, map.col_y)};
  }
  double boundary_distance(Vec2 p) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < polygon.size(); ++k) {
      best = std::min(best, point_segment_distance(
                                p, Segment2{polygon[k], polygon[(k + 1) % polygon.size()]}));
    }
    return best;
  }
  bool interior(Vec2 p, double margin) const {
    return polygon_contains(polygon, p, -1.0) && boundary_distance(p) > margin;
  }
};

FaceImage face_image(const Folding& f, int face) {
  FaceImage img;
  img.polygon = f.pattern.face_polygon(face);
  img.map = f.face_maps[face];
  img.tris2 = triangulate(img.polygon);
  for (const auto& t : img.tris2) {
    img.tris3.push_back({img.map.apply(t[0]), img.map.apply(t[1]), img.map.apply(t[2])});
  }
  img.normal = normalized(cross(img.map.col_x, img.map.col_y));
  img.lo = img.hi = img.map.apply(img.polygon.front());
  for (const Vec2& p : img.polygon) {
    const Vec3 q = img.map.apply(p);
    img.lo = {std::min(img.lo.x, q.x), std::min(img.lo.y, q.y), std::min(img.lo.z, q.z)};
    img.hi = {std::max(img.hi.x, q.x), std::max(img.hi.y, q.y), std::max(img.hi.z, q.z)};
  }
  return img;
}

bool boxes_overlap(const FaceImage& a, const FaceImage& b, double eps) {
  return a.lo.x <= b.hi.x + eps && b.lo.x <= a.hi.x + eps && a.lo.y <= b.hi.y + eps &&
         b.lo.y <= a.hi.y + eps && a.lo.z <= b.hi.z + eps && b.lo.z <= a.hi.z + eps;
}

// Part of triangle t on the plane (n, o) as an interval along `line`.
std::optional<std::pair<Vec3, Vec3>> triangle_plane_cut(const Tri3& t, Vec3 n, Vec3 o,
                                                        Vec3 line, double eps) {
  std::array<double, 3> d{};
  for (int k = 0; k < 3; ++k) d[k] = dot(n, t[k] - o);
  if ((d[0] > eps && d[1] > eps && d[2] > eps) || (d[0] < -eps && d[1] < -eps && d[2] < -eps)) {
    return std::nullopt;
  }
  std::vector<Vec3> pts;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(d[k]) <= eps) pts.push_back(t[k]);
    const int m = (k + 1) % 3;
    if ((d[k] > eps && d[m] < -eps) || (d[k] < -eps && d[m] > eps)) {
      pts.push_back(t[k] + (t[m] - t[k]) * (d[k] / (d[k] - d[m])));
    }
  }
  if (pts.empty()) return std::nullopt;
  auto key = [&](Vec3 p) { return dot(p, line); };
  const auto [mn, mx] = std::minmax_element(
      pts.begin(), pts.end(), [&](Vec3 a, Vec3 b) { return key(a) < key(b); });
  return std::make_pair(*mn, *mx);
}

// Signed area of the intersection of two counter-clockwise triangles.
double triangle_overlap_area(Tri2 a, Tri2 b) {
  auto orient = [](Tri2& t) {
    if (cross(t[1] - t[0], t[2] - t[0]) < 0) std::swap(t[1], t[2]);
  };
  orient(a);
  orient(b);
  std::vector<Vec2> poly(a.begin(), a.end());
  for (int e = 0; e < 3 && !poly.empty(); ++e) {
    const Vec2 p = b[e];
    const Vec2 q = b[(e + 1) % 3];
    std::vector<Vec2> next;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Vec2 s = poly[k];
      const Vec2 t = poly[(k + 1) % poly.size()];
      const double ds = cross(q - p, s - p);
      const double dt = cross(q - p, t - p);
      if (ds >= 0) next.push_back(s);
      if ((ds >= 0) != (dt >= 0)) next.push_back(s + (t - s) * (ds / (ds - dt)));
    }
    poly = std::move(next);
  }
  return poly.size() < 3 ? 0.0 : signed_area(poly);
}

int severity(IntersectionKind k) { return static_cast<int>(k); }

std::optional<IntersectionFinding> classify_pair(const FaceImage& A, const FaceImage& B,
                                                 const Tolerance& tol) {
  const double plane_eps = 10.0 * tol.iso;
  const double shared_eps = 1e3 * tol.geom;
  const double interior_margin = 1e2 * tol.geom;
  if (!boxes_overlap(A, B, plane_eps)) return std::nullopt;

  std::optional<IntersectionFinding> best;
  auto record = [&](IntersectionKind kind, Vec3 p, Vec3 q) {
    if (!best || severity(kind) > severity(best->kind)) {
      best = IntersectionFinding{0, 0, kind, Segment3{p, q}};
    }
  };
  auto same_paper_point = [&](Vec3 x) {
    return distance(A.preimage(x), B.preimage(x)) <= shared_eps;
  };

  const Vec3 o = A.map.translation;
  const bool parallel = cross(A.normal, B.normal).norm() <= tol.angle;
  if (parallel) {
    if (std::abs(dot(A.normal, B.map.translation - o)) > plane_eps) return std::nullopt;
    // Coplanar: work in A's paper coordinates.
    double area = 0.0;
    Vec2 witness{};
    for (const auto& ta : A.tris2) {
      for (const auto& tb3 : B.tris3) {
        const Tri2 tb{A.preimage(tb3[0]), A.preimage(tb3[1]), A.preimage(tb3[2])};
        const double a = triangle_overlap_area(ta, tb);
        if (a > area) {
          area = a;
          witness = (ta[0] + ta[1] + ta[2]) * (1.0 / 3.0);
        }
      }
    }
    if (area > tol.geom) {
      const Vec3 w = A.map.apply(witness);
      record(IntersectionKind::CoincidentOverlap, w, w);
      return best;
    }
    // Contacts: vertices of one face on the other.
    auto contacts = [&](const FaceImage& P, const FaceImage& Q) {
      for (const Vec2& v : P.polygon) {
        const Vec3 x = P.map.apply(v);
        const Vec2 q = Q.preimage(x);
        if (!polygon_contains(Q.polygon, q, plane_eps)) continue;
        record(same_paper_point(x) ? IntersectionKind::SharedCrease : IntersectionKind::Touching,
               x, x);
      }
    };
    contacts(A, B);
    contacts(B, A);
    return best;
  }

  const Vec3 line = normalized(cross(A.normal, B.normal));
  for (const auto& ta : A.tris3) {
    const auto ca = triangle_plane_cut(ta, B.normal, B.map.translation, line, plane_eps);
    if (!ca) continue;
    for (const auto& tb : B.tris3) {
      const auto cb = triangle_plane_cut(tb, A.normal, o, line, plane_eps);
      if (!cb) continue;
      const double a0 = dot(ca->first, line), a1 = dot(ca->second, line);
      const double b0 = dot(cb->first, line), b1 = dot(cb->second, line);
      const double lo = std::max(a0, b0);
      const double hi = std::min(a1, b1);
      if (lo > hi + plane_eps) continue;
      auto on_a = [&](double s) {
        if (a1 - a0 <= 0) return ca->first;
        return ca->first + (ca->second - ca->first) * ((s - a0) / (a1 - a0));
      };
      const Vec3 p = on_a(lo);
      const Vec3 q = on_a(std::max(lo, hi));
      IntersectionKind kind = IntersectionKind::SharedCrease;
      bool transversal = false;
      for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const Vec3 x = p + (q - p) * frac;
        if (!same_paper_point(x)) kind = IntersectionKind::Touching;
        if (distance(p, q) > plane_eps && A.interior(A.preimage(x), interior_margin) &&
            B.interior(B.preimage(x), interior_margin)) {
          transversal = true;
        }
      }
      record(transversal ? IntersectionKind::TransversalCrossing : kind, p, q);
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(IntersectionKind k) {
  switch (k) {
    case IntersectionKind::SharedCrease: return "shared-crease";
    case IntersectionKind::CoincidentOverlap: return "coincident-overlap";
    case IntersectionKind::Touching: return "touching";
    case IntersectionKind::TransversalCrossing: return "transversal-crossing";
  }
  return "unknown";
}

std::string_view to_string(Properness p) {
  switch (p) {
    case Properness::ProperInjective: return "ProperInjective";
    case Properness::ProperFlatContact: return "ProperFlatContact";
    case Properness::ImproperTransversal: return "ImproperTransversal";
    case Properness::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::vector<IntersectionFinding> self_intersections(const Folding& f, const Tolerance& tol) {
  const int n = static_cast<int>(f.pattern.faces.size());
  std::vector<FaceImage> imgs;
  imgs.reserve(n);
  for (int i = 0; i < n; ++i) imgs.push_back(face_image(f, i));
  std::vector<IntersectionFinding> out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (auto hit = classify_pair(imgs[a], imgs[b], tol)) {
        hit->face_a = a;
        hit->face_b = b;
        out.push_back(*hit);
      }
    }
  }
  return out;
}

bool is_injective(const Folding& f, const Tolerance& tol) {
  const auto findings = self_intersections(f, tol);
  return std::all_of(findings.begin(), findings.end(), [](const IntersectionFinding& x) {
    return x.kind == IntersectionKind::SharedCrease;
  });
}

namespace {

// Opens every flat crease by delta, trying each choice of side.
bool flat_creases_open_injectively(const Folding& f, const Tolerance& tol) {
  if (!is_chord_pattern(f.pattern, tol)) return false;
  const std::vector<double> angles = chord_fold_angles(f);
  std::vector<int> flat;
  for (std::size_t c = 0; c < angles.size(); ++c) {
    if (std::abs(std::abs(angles[c]) - std::numbers::pi) <= 1e3 * tol.angle) {
      flat.push_back(static_cast<int>(c));
    }
  }
  if (flat.size() > 6) return false;
  for (unsigned mask = 0; mask < (1u << flat.size()); ++mask) {
    bool all_injective = true;
    for (double delta : {1e-2, 1e-3}) {
      std::vector<double> opened = angles;
      for (std::size_t k = 0; k < flat.size(); ++k) {
        const double side = (mask >> k) & 1u ? -1.0 : 1.0;
        opened[flat[k]] = side * (std::numbers::pi - delta);
      }
      if (!is_injective(fold_along_chords(f.pattern, opened, 0, tol), tol)) {
        all_injective = false;
        break;
      }
    }
    if (all_injective) return true;
  }
  return false;
}

}  // namespace

PropernessVerdict properness_verdict(const Folding& f, const Tolerance& tol) {
  PropernessVerdict v;
  v.findings = self_intersections(f, tol);
  bool only_creases = true;
  bool transversal = false;
  for (const auto& x : v.findings) {
    only_creases = only_creases && x.kind == IntersectionKind::SharedCrease;
    transversal = transversal || x.kind == IntersectionKind::TransversalCrossing;
  }
  if (only_creases) {
    v.verdict = Properness::ProperInjective;
  } else if (transversal) {
    v.verdict = Properness::ImproperTransversal;
  } else if (flat_creases_open_injectively(f, tol)) {
    v.verdict = Properness::ProperFlatContact;
  } else {
    v.verdict = Properness::Unknown;
  }
  return v;
}

}  // namespace orikami
