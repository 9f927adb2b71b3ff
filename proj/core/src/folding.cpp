#include "orikami/folding.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "orikami/error.hpp"

namespace orikami {

namespace {

constexpr std::array<Vec2, 4> kCorners{Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}};

bool on_boundary(Vec2 p, double eps) {
  return std::abs(p.x) <= eps || std::abs(p.x - 1) <= eps || std::abs(p.y) <= eps ||
         std::abs(p.y - 1) <= eps;
}

// Counter-clockwise perimeter coordinate in [0, 4).
double perimeter_param(Vec2 p, double eps) {
  if (std::abs(p.y) <= eps && p.x < 1 - eps) return p.x;
  if (std::abs(p.x - 1) <= eps && p.y < 1 - eps) return 1 + p.y;
  if (std::abs(p.y - 1) <= eps && p.x > eps) return 2 + (1 - p.x);
  return 3 + (1 - p.y);
}

// Which sides of the square a boundary point lies on, as a bit mask.
int side_mask(Vec2 p, double eps) {
  int m = 0;
  if (std::abs(p.y) <= eps) m |= 1;
  if (std::abs(p.x - 1) <= eps) m |= 2;
  if (std::abs(p.y - 1) <= eps) m |= 4;
  if (std::abs(p.x) <= eps) m |= 8;
  return m;
}

bool edge_in_cycle(const std::vector<int>& cycle, int u, int v) {
  const std::size_t n = cycle.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int a = cycle[i];
    const int b = cycle[(i + 1) % n];
    if ((a == u && b == v) || (a == v && b == u)) return true;
  }
  return false;
}

}  // namespace

std::vector<Vec2> CreasePattern::face_polygon(int face) const {
  std::vector<Vec2> poly;
  for (int v : faces.at(face)) poly.push_back(vertices[v]);
  return poly;
}

double CreasePattern::face_area(int face) const { return signed_area(face_polygon(face)); }

std::optional<int> CreasePattern::face_containing(Vec2 p, double eps) const {
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (polygon_contains(face_polygon(f), p, eps)) return f;
  }
  return std::nullopt;
}

std::vector<int> CreasePattern::faces_of_crease(int crease) const {
  const auto [u, v] = crease_edges.at(crease);
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (edge_in_cycle(faces[f], u, v)) out.push_back(f);
  }
  return out;
}

bool CreasePattern::faces_adjacent(int a, int b) const {
  for (int c = 0; c < static_cast<int>(crease_edges.size()); ++c) {
    const auto fs = faces_of_crease(c);
    if (fs.size() == 2 && ((fs[0] == a && fs[1] == b) || (fs[0] == b && fs[1] == a))) {
      return true;
    }
  }
  return false;
}

CreasePattern build_pattern(std::vector<Vec2> vertices, std::vector<Edge> creases,
                            const Tolerance& tol) {
  const double eps = tol.geom;
  for (auto& v : vertices) {
    if (!is_finite(v) || v.x < -eps || v.x > 1 + eps || v.y < -eps || v.y > 1 + eps) {
      throw DomainError("build_pattern: vertex outside the unit square");
    }
    v.x = std::clamp(v.x, 0.0, 1.0);
    v.y = std::clamp(v.y, 0.0, 1.0);
  }
  const int n = static_cast<int>(vertices.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(vertices[i], vertices[j]) <= eps) {
        throw NonPlanarError("build_pattern: coincident vertices " + std::to_string(i) + " and " +
                             std::to_string(j));
      }
    }
  }
  std::set<Edge> seen;
  for (auto& [u, v] : creases) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw DomainError("build_pattern: crease references an invalid vertex");
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw NonPlanarError("build_pattern: duplicate crease");
    if ((side_mask(vertices[u], eps) & side_mask(vertices[v], eps)) != 0) {
      throw NonPlanarError("build_pattern: crease runs along the square boundary");
    }
  }

  const int m = static_cast<int>(creases.size());
  for (int i = 0; i < m; ++i) {
    const Segment2 si{vertices[creases[i].first], vertices[creases[i].second]};
    for (int k = 0; k < n; ++k) {
      if (k == creases[i].first || k == creases[i].second) continue;
      if (point_segment_distance(vertices[k], si) <= eps) {
        throw NonPlanarError("build_pattern: vertex " + std::to_string(k) +
                             " lies on crease " + std::to_string(i));
      }
    }
    for (int j = i + 1; j < m; ++j) {
      const Segment2 sj{vertices[creases[j].first], vertices[creases[j].second]};
      const auto r = segment_intersect(si, sj, tol);
      if (std::holds_alternative<intersection::None>(r)) continue;
      const bool shares = creases[i].first == creases[j].first ||
                          creases[i].first == creases[j].second ||
                          creases[i].second == creases[j].first ||
                          creases[i].second == creases[j].second;
      if (shares && std::holds_alternative<intersection::Point>(r)) continue;
      throw NonPlanarError("build_pattern: creases " + std::to_string(i) + " and " +
                           std::to_string(j) + " cross without a shared vertex");
    }
  }

  for (Vec2 c : kCorners) {
    const bool present = std::any_of(vertices.begin(), vertices.end(),
                                      [&](Vec2 v) { return distance(v, c) <= eps; });
    if (!present) vertices.push_back(c);
  }

  std::vector<int> boundary;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (on_boundary(vertices[i], eps)) boundary.push_back(i);
  }
  std::sort(boundary.begin(), boundary.end(), [&](int a, int b) {
    return perimeter_param(vertices[a], eps) < perimeter_param(vertices[b], eps);
  });
  std::vector<Edge> all = creases;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    all.push_back({boundary[i], boundary[(i + 1) % boundary.size()]});
  }

  CreasePattern cp;
  cp.vertices = std::move(vertices);
  cp.crease_edges = std::move(creases);
  cp.faces = planar_faces(cp.vertices, all);

  double total = 0.0;
  for (int f = 0; f < static_cast<int>(cp.faces.size()); ++f) total += cp.face_area(f);
  if (std::abs(total - 1.0) > eps) {
    throw NonPlanarError("build_pattern: faces do not partition the square (area " +
                         std::to_string(total) + ")");
  }
  for (int c = 0; c < m; ++c) {
    if (cp.faces_of_crease(c).size() != 2) {
      throw NonPlanarError("build_pattern: crease " + std::to_string(c) +
                           " does not separate two faces");
    }
  }
  return cp;
}

Folding::Folding(CreasePattern p, std::vector<RigidEmbedding> maps)
    : pattern(std::move(p)), face_maps(std::move(maps)) {
  if (face_maps.size() != pattern.faces.size()) {
    throw DomainError("Folding: need exactly one embedding per face (" +
                      std::to_string(pattern.faces.size()) + " faces, " +
                      std::to_string(face_maps.size()) + " maps)");
  }
}

Folding Folding::identity() {
  return Folding(build_pattern({}, {}), {RigidEmbedding::identity()});
}

std::vector<Vec3> Folding::face_image(int face) const {
  std::vector<Vec3> out;
  for (int v : pattern.faces.at(face)) out.push_back(face_maps[face].apply(pattern.vertices[v]));
  return out;
}

ValidationReport validate_folding(const Folding& f, bool strict, const Tolerance& tol) {
  ValidationReport r;
  r.strict = strict;
  for (int i = 0; i < static_cast<int>(f.face_maps.size()); ++i) {
    const double d = f.face_maps[i].orthonormality_defect();
    r.max_face_defect = std::max(r.max_face_defect, d);
    if (!(d <= tol.iso)) r.face_defects.push_back({i, d});
  }
  for (int c = 0; c < static_cast<int>(f.pattern.crease_edges.size()); ++c) {
    const auto fs = f.pattern.faces_of_crease(c);
    if (fs.size() != 2) {
      r.crease_defects.push_back({c, 1.0});
      continue;
    }
    const auto& ea = f.face_maps[fs[0]];
    const auto& eb = f.face_maps[fs[1]];
    double d = 0.0;
    for (int v : {f.pattern.crease_edges[c].first, f.pattern.crease_edges[c].second}) {
      const Vec2 p = f.pattern.vertices[v];
      d = std::max(d, distance(ea.apply(p), eb.apply(p)));
    }
    r.max_crease_defect = std::max(r.max_crease_defect, d);
    if (!(d <= tol.iso)) r.crease_defects.push_back({c, d});
    if (strict && ea.distance_to(eb) <= tol.iso) r.spurious_creases.push_back(c);
  }
  return r;
}

int crease_edge_count(const Folding& f) { return static_cast<int>(f.pattern.crease_edges.size()); }

Vec3 fold_point(const Folding& f, Vec2 p, const Tolerance& tol) {
  if (!is_finite(p) || p.x < -tol.geom || p.x > 1 + tol.geom || p.y < -tol.geom ||
      p.y > 1 + tol.geom) {
    throw DomainError("fold_point: point outside the unit square");
  }
  const auto face = f.pattern.face_containing(p, tol.geom);
  if (!face) throw DomainError("fold_point: point not covered by any face");
  return f.face_maps[*face].apply(p);
}

double PaperLoop::length() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    acc += distance(waypoints[i], waypoints[(i + 1) % waypoints.size()]);
  }
  return acc;
}

double SpatialPolyline::length() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    acc += distance(waypoints[i], waypoints[(i + 1) % waypoints.size()]);
  }
  return acc;
}

void validate_loop(const PaperLoop& loop, const Tolerance& tol) {
  const auto& w = loop.waypoints;
  const std::size_t n = w.size();
  if (n < 3) throw DomainError("loop: need at least three waypoints");
  for (Vec2 p : w) {
    if (!is_finite(p) || p.x < -tol.geom || p.x > 1 + tol.geom || p.y < -tol.geom ||
        p.y > 1 + tol.geom) {
      throw DomainError("loop: waypoint outside the unit square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(w[i], w[(i + 1) % n]) <= tol.geom) {
      throw DomainError("loop: consecutive waypoints coincide");
    }
  }
  auto seg = [&](std::size_t i) { return Segment2{w[i], w[(i + 1) % n]}; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const auto r = segment_intersect(seg(i), seg(j), tol);
      if (std::holds_alternative<intersection::None>(r)) continue;
      // Neighbours always touch at their shared waypoint; anything more is a fold-back.
      if (adjacent && std::holds_alternative<intersection::Point>(r)) continue;
      throw DomainError("loop: not simple (segments " + std::to_string(i) + " and " +
                        std::to_string(j) + " intersect)");
    }
  }
}

bool polyline_is_injective(std::span<const Vec3> pts, const Tolerance& tol) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  auto seg = [&](std::size_t i) { return Segment3{pts[i], pts[(i + 1) % n]}; };
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 u = pts[(i + 1) % n] - pts[i];
    const Vec3 v = pts[(i + 2) % n] - pts[(i + 1) % n];
    if (u.norm() <= tol.geom) return false;
    // Folding straight back along the previous segment.
    if (cross(u, v).norm() <= tol.geom * u.norm() * v.norm() && dot(u, v) < 0) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segment_segment_distance(seg(i), seg(j)) <= tol.geom) return false;
    }
  }
  return true;
}

SpatialPolyline fold_loop(const Folding& f, const PaperLoop& loop, const Tolerance& tol) {
  validate_loop(loop, tol);
  const auto& w = loop.waypoints;
  const std::size_t n = w.size();
  const auto& cp = f.pattern;

  std::vector<Vec3> image;
  for (std::size_t i = 0; i < n; ++i) {
    const Segment2 s{w[i], w[(i + 1) % n]};
    std::vector<double> params{0.0, 1.0};
    for (const auto& [u, v] : cp.crease_edges) {
      const auto r = segment_intersect(s, Segment2{cp.vertices[u], cp.vertices[v]}, tol);
      if (const auto* pt = std::get_if<intersection::Point>(&r)) {
        params.push_back(pt->t_a);
      } else if (const auto* ov = std::get_if<intersection::Overlap>(&r)) {
        params.push_back(ov->t_begin);
        params.push_back(ov->t_end);
      }
    }
    std::sort(params.begin(), params.end());
    const double len = s.length();
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
      const double t0 = params[k];
      const double t1 = params[k + 1];
      if ((t1 - t0) * len <= tol.geom) continue;
      const Vec2 mid = s.at(0.5 * (t0 + t1));
      const auto face = cp.face_containing(mid, tol.geom);
      if (!face) throw DomainError("fold_loop: loop leaves the folded square");
      const Vec3 p = f.face_maps[*face].apply(s.at(t0));
      if (image.empty() || distance(image.back(), p) > tol.geom) image.push_back(p);
    }
  }
  while (image.size() > 1 && distance(image.front(), image.back()) <= tol.geom) image.pop_back();

  SpatialPolyline out;
  out.waypoints = std::move(image);
  out.injective = polyline_is_injective(out.waypoints, tol);
  return out;
}

}  // namespace orikami
