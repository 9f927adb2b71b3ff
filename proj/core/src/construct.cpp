#include "orikami/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "orikami/error.hpp"
#include "orikami/planar_graph.hpp"

namespace orikami {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool adjacent_edges(int i, int j, int n) {
  return (i + 1) % n == j || (j + 1) % n == i;
}

double min_edge_clearance(const StickDiagram& s, Vec2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < s.size(); ++i) best = std::min(best, point_segment_distance(p, s.edge(i)));
  return best;
}

// Interior point of a face: its centroid when that lies inside, otherwise the
// best point on a grid over the bounding box.
std::optional<Vec2> face_sample(const StickDiagram& s, const std::vector<Vec2>& poly,
                                double eps) {
  double area = 0.0;
  Vec2 c{};
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const Vec2 a = poly[k];
    const Vec2 b = poly[(k + 1) % poly.size()];
    const double w = cross(a, b);
    area += w;
    c = c + (a + b) * w;
  }
  if (std::abs(area) > eps) {
    c = c * (1.0 / (3.0 * area));
    if (polygon_contains(poly, c, -eps)) return c;
  }
  Vec2 lo = poly.front(), hi = poly.front();
  for (const Vec2& p : poly) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  constexpr int kGrid = 48;
  std::optional<Vec2> best;
  double best_clearance = -1.0;
  for (int i = 1; i < kGrid; ++i) {
    for (int j = 1; j < kGrid; ++j) {
      const Vec2 p{lo.x + (hi.x - lo.x) * i / kGrid, lo.y + (hi.y - lo.y) * j / kGrid};
      if (!polygon_contains(poly, p, -eps)) continue;
      const double cl = min_edge_clearance(s, p);
      if (cl > best_clearance) {
        best_clearance = cl;
        best = p;
      }
    }
  }
  return best;
}

}  // namespace

Segment2 StickDiagram::edge(int i) const {
  const int n = size();
  return {vertices[i], vertices[(i + 1) % n]};
}

std::vector<StickIntersection> stick_intersections(const StickDiagram& s, const Tolerance& tol) {
  const int n = s.size();
  if (n < 3) throw ConstructionError("stick diagram needs at least 3 vertices");
  for (int i = 0; i < n; ++i) {
    if (!is_finite(s.vertices[i])) throw ConstructionError("stick vertex is not finite");
    if (s.edge(i).length() <= tol.geom) {
      throw NonGenericError("stick edge " + std::to_string(i) + " has zero length");
    }
  }
  for (int i = 0; i < n; ++i) {
    const Segment2 a = s.edge(i);
    const Segment2 b = s.edge((i + 1) % n);
    const Vec2 da = normalized(a.b - a.a);
    const Vec2 db = normalized(b.b - b.a);
    if (std::abs(cross(da, db)) <= tol.angle) {
      throw NonGenericError("stick edges " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % n) + " are collinear");
    }
  }
  std::vector<StickIntersection> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adjacent_edges(i, j, n)) continue;
      const auto hit = segment_intersect(s.edge(i), s.edge(j), tol);
      if (std::holds_alternative<intersection::None>(hit)) continue;
      const auto* p = std::get_if<intersection::Point>(&hit);
      if (p == nullptr || p->t_a <= tol.geom || p->t_a >= 1.0 - tol.geom ||
          p->t_b <= tol.geom || p->t_b >= 1.0 - tol.geom) {
        throw NonGenericError("stick edges " + std::to_string(i) + " and " + std::to_string(j) +
                              " meet non-transversally");
      }
      out.push_back({i, j, p->t_a, p->t_b, p->p});
    }
  }
  // Vertices must stay off non-incident edges.
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < n; ++e) {
      if (e == v || (e + 1) % n == v) continue;
      if (point_segment_distance(s.vertices[v], s.edge(e)) <= tol.geom) {
        throw NonGenericError("stick vertex " + std::to_string(v) + " lies on edge " +
                              std::to_string(e));
      }
    }
  }
  return out;
}

void validate_sticks(const StickDiagram& s, const Tolerance& tol) {
  const auto hits = stick_intersections(s, tol);
  std::set<std::pair<int, int>> geometric;
  for (const auto& h : hits) geometric.insert({h.edge_a, h.edge_b});
  std::set<std::pair<int, int>> declared;
  for (const auto& c : s.crossings) {
    const auto key = std::minmax(c.edge_a, c.edge_b);
    if (c.over != c.edge_a && c.over != c.edge_b) {
      throw ConstructionError("crossing override names edge " + std::to_string(c.over) +
                              " which is not one of its edges");
    }
    if (!declared.insert(key).second) {
      throw ConstructionError("duplicate crossing override for edges " +
                              std::to_string(key.first) + "," + std::to_string(key.second));
    }
    if (!geometric.contains(key)) {
      throw ConstructionError("crossing override for edges " + std::to_string(key.first) + "," +
                              std::to_string(key.second) + " has no geometric crossing");
    }
  }
  for (const auto& key : geometric) {
    if (!declared.contains(key)) {
      throw ConstructionError("geometric crossing of edges " + std::to_string(key.first) + "," +
                              std::to_string(key.second) + " has no override");
    }
  }
}

namespace {

int over_edge(const StickDiagram& s, int a, int b) {
  for (const auto& c : s.crossings) {
    if (std::minmax(c.edge_a, c.edge_b) == std::minmax(a, b)) return c.over;
  }
  throw ConstructionError("missing crossing override");
}

}  // namespace

KnotDiagram reference_diagram(const StickDiagram& s, const Tolerance& tol) {
  validate_sticks(s, tol);
  const auto hits = stick_intersections(s, tol);
  const int n = s.size();
  // Per edge: (t, height) with height +1 when the edge is over.
  std::vector<std::vector<std::pair<double, double>>> marks(n);
  for (const auto& h : hits) {
    const int over = over_edge(s, h.edge_a, h.edge_b);
    marks[h.edge_a].push_back({h.t_a, over == h.edge_a ? 1.0 : -1.0});
    marks[h.edge_b].push_back({h.t_b, over == h.edge_b ? 1.0 : -1.0});
  }
  std::vector<Vec3> pts;
  for (int i = 0; i < n; ++i) {
    auto& m = marks[i];
    std::sort(m.begin(), m.end());
    double gap = 0.5;
    for (std::size_t k = 0; k < m.size(); ++k) {
      gap = std::min({gap, m[k].first, 1.0 - m[k].first});
      if (k > 0) gap = std::min(gap, m[k].first - m[k - 1].first);
    }
    const double delta = gap / 4.0;
    const Segment2 e = s.edge(i);
    pts.push_back({e.a.x, e.a.y, 0.0});
    for (const auto& [t, h] : m) {
      const Vec2 p0 = e.at(t - delta);
      const Vec2 p1 = e.at(t + delta);
      pts.push_back({p0.x, p0.y, h});
      pts.push_back({p1.x, p1.y, h});
    }
  }
  return diagram_from_polyline_along(pts, {0.0, 0.0, 1.0}, tol);
}

double angle_sum(const StickDiagram& s, const Vec2& q, double z) {
  const Vec3 apex{q.x, q.y, z};
  double sum = 0.0;
  for (int i = 0; i < s.size(); ++i) {
    const Segment2 e = s.edge(i);
    sum += angle_between(Vec3{e.a.x, e.a.y, 0.0} - apex, Vec3{e.b.x, e.b.y, 0.0} - apex);
  }
  return sum;
}

double ConeConstruction::angle_residual() const {
  double sum = 0.0;
  for (double t : thetas) sum += t;
  return std::abs(sum - kTwoPi);
}

Vec2 choose_apex(const StickDiagram& s, const Tolerance& tol) {
  const auto hits = stick_intersections(s, tol);
  const int n = s.size();
  std::vector<Vec2> points(s.vertices);
  std::vector<std::vector<std::pair<double, int>>> on_edge(n);
  for (int i = 0; i < n; ++i) {
    on_edge[i].push_back({0.0, i});
    on_edge[i].push_back({1.0, (i + 1) % n});
  }
  for (const auto& h : hits) {
    const int id = static_cast<int>(points.size());
    points.push_back(h.point);
    on_edge[h.edge_a].push_back({h.t_a, id});
    on_edge[h.edge_b].push_back({h.t_b, id});
  }
  std::vector<Edge> edges;
  for (auto& list : on_edge) {
    std::sort(list.begin(), list.end());
    for (std::size_t k = 0; k + 1 < list.size(); ++k) {
      edges.push_back({list[k].second, list[k + 1].second});
    }
  }
  const auto faces = planar_faces(points, edges);

  std::optional<Vec2> best;
  double best_clearance = -1.0;
  std::ostringstream sums;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::vector<Vec2> poly;
    for (int v : faces[f]) poly.push_back(points[v]);
    const auto sample = face_sample(s, poly, tol.geom);
    if (!sample) continue;
    const double total = angle_sum(s, *sample, 0.0);
    sums << " face " << f << ": " << total;
    if (total < kTwoPi - tol.angle) continue;
    const double cl = min_edge_clearance(s, *sample);
    if (cl > best_clearance) {
      best_clearance = cl;
      best = sample;
    }
  }
  if (!best) {
    throw ConstructionError("no bounded face has angle sum >= 2pi;" + sums.str());
  }
  return *best;
}

ConeConstruction solve_apex_height(const StickDiagram& s, const Vec2& q0, const Tolerance& tol) {
  auto residual = [&](double z) { return angle_sum(s, q0, z) - kTwoPi; };
  const double r0 = residual(0.0);
  if (r0 < -tol.angle) {
    throw ConstructionError("angle sum at the chosen apex is below 2pi");
  }
  double z = 0.0;
  if (std::abs(r0) > tol.angle) {
    double reach = 0.0;
    for (const Vec2& v : s.vertices) reach = std::max(reach, distance(v, q0));
    double lo = 0.0;
    double hi = reach;
    while (residual(hi) >= 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > std::ldexp(1.0, 60)) throw NumericError("apex height bracketing failed");
    }
    // Bisect to machine precision; the residual check below is the contract.
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (residual(mid) >= 0.0 ? lo : hi) = mid;
    }
    z = std::abs(residual(lo)) <= std::abs(residual(hi)) ? lo : hi;
    if (std::abs(residual(z)) > tol.angle) {
      throw NumericError("apex height bisection did not reach the angle tolerance");
    }
  }
  ConeConstruction c;
  c.apex = {q0.x, q0.y, z};
  c.sticks = s;
  for (int i = 0; i < s.size(); ++i) {
    const Segment2 e = s.edge(i);
    const Vec3 a{e.a.x, e.a.y, 0.0};
    const Vec3 b{e.b.x, e.b.y, 0.0};
    c.radii.push_back(distance(a, c.apex));
    c.thetas.push_back(angle_between(a - c.apex, b - c.apex));
  }
  return c;
}

namespace {

Vec2 ray_to_boundary(Vec2 c, double phi) {
  const Vec2 d{std::cos(phi), std::sin(phi)};
  double t = std::numeric_limits<double>::infinity();
  if (std::abs(d.x) > 0) t = std::min(t, ((d.x > 0 ? 1.0 : 0.0) - c.x) / d.x);
  if (std::abs(d.y) > 0) t = std::min(t, ((d.y > 0 ? 1.0 : 0.0) - c.y) / d.y);
  const Vec2 p = c + d * t;
  return {std::clamp(p.x, 0.0, 1.0), std::clamp(p.y, 0.0, 1.0)};
}

Vec3 lift(Vec2 p) { return {p.x, p.y, 0.0}; }

}  // namespace

ConeUnfolding unfold_to_pattern(const ConeConstruction& c, const Tolerance& tol) {
  const int n = static_cast<int>(c.radii.size());
  if (n < 3 || static_cast<int>(c.thetas.size()) != n) {
    throw ConstructionError("cone construction is incomplete");
  }
  double closure = 0.0;
  for (double t : c.thetas) closure += t;
  if (std::abs(closure - kTwoPi) > 10.0 * tol.angle) {
    throw ConstructionError("cone angles do not close up: residual " +
                            std::to_string(closure - kTwoPi));
  }
  ConeUnfolding u;
  const double rmax = *std::max_element(c.radii.begin(), c.radii.end());
  if (!(rmax > 0)) throw ConstructionError("cone radii must be positive");
  u.scale = kUnfoldRadius / rmax;

  std::vector<Vec2> verts{u.apex};
  std::vector<Edge> creases;
  std::vector<double> phis(n);
  double phi = 0.0;
  for (int i = 0; i < n; ++i) {
    phis[i] = phi;
    const double r = u.scale * c.radii[i];
    u.paper_vertices.push_back(u.apex + Vec2{std::cos(phi), std::sin(phi)} * r);
    verts.push_back(ray_to_boundary(u.apex, phi));
    creases.push_back({0, i + 1});
    phi += c.thetas[i];
  }
  u.pattern = build_pattern(std::move(verts), std::move(creases), tol);
  if (static_cast<int>(u.pattern.faces.size()) != n) {
    throw ConstructionError("unfolded pattern does not have one face per wedge");
  }
  for (int i = 0; i < n; ++i) {
    const double mid = phis[i] + 0.5 * c.thetas[i];
    const Vec2 probe = u.apex + Vec2{std::cos(mid), std::sin(mid)} * 0.05;
    const auto face = u.pattern.face_containing(probe, tol.geom);
    if (!face) throw ConstructionError("wedge " + std::to_string(i) + " has no face");
    u.wedge_faces.push_back(*face);
  }
  return u;
}

Folding build_cone_folding(const ConeConstruction& c, const ConeUnfolding& u,
                           const Tolerance& tol) {
  const int n = static_cast<int>(u.paper_vertices.size());
  const auto& sticks = c.sticks.vertices;
  std::vector<RigidEmbedding> maps(u.pattern.faces.size());
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const std::array<Vec2, 3> src{u.apex, u.paper_vertices[i], u.paper_vertices[j]};
    const std::array<Vec3, 3> dst{c.apex * u.scale, lift(sticks[i]) * u.scale,
                                  lift(sticks[j]) * u.scale};
    maps[u.wedge_faces[i]] = embedding_from_triangles(src, dst, tol);
  }
  Folding f(u.pattern, std::move(maps));
  const auto report = validate_folding(f, false, tol);
  if (!report.valid()) {
    throw ConstructionError("cone folding fails validation: max crease defect " +
                            std::to_string(report.max_crease_defect));
  }
  return f;
}

double congruence_defect(const ConeConstruction& c, const ConeUnfolding& u) {
  const int n = static_cast<int>(u.paper_vertices.size());
  const auto& sticks = c.sticks.vertices;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const Vec3 q = c.apex * u.scale;
    const Vec3 a = lift(sticks[i]) * u.scale;
    const Vec3 b = lift(sticks[j]) * u.scale;
    const Vec2 pa = u.paper_vertices[i];
    const Vec2 pb = u.paper_vertices[j];
    worst = std::max({worst, std::abs(distance(u.apex, pa) - distance(q, a)),
                      std::abs(distance(u.apex, pb) - distance(q, b)),
                      std::abs(distance(pa, pb) - distance(a, b))});
  }
  return worst;
}

PaperLoop loop_with_crossings(const ConeConstruction& c, const ConeUnfolding& u,
                              const Tolerance& tol) {
  const StickDiagram& s = c.sticks;
  validate_sticks(s, tol);
  const auto hits = stick_intersections(s, tol);
  const int n = s.size();
  if (!hits.empty() && c.apex.z <= tol.geom) {
    throw ConstructionError("crossings need a raised apex; a flat cone cannot lift a detour");
  }

  // Detour radius from the planar clearance around each crossing.
  double clearance = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < hits.size(); ++a) {
    const Vec2 x = hits[a].point;
    for (std::size_t b = 0; b < hits.size(); ++b) {
      if (a != b) clearance = std::min(clearance, distance(x, hits[b].point));
    }
    for (const Vec2& v : s.vertices) clearance = std::min(clearance, distance(x, v));
    for (int e = 0; e < n; ++e) {
      if (e == hits[a].edge_a || e == hits[a].edge_b) continue;
      clearance = std::min(clearance, point_segment_distance(x, s.edge(e)));
    }
  }

  std::vector<std::vector<double>> detours(n);
  for (const auto& h : hits) {
    const int over = over_edge(s, h.edge_a, h.edge_b);
    detours[over].push_back(over == h.edge_a ? h.t_a : h.t_b);
  }

  PaperLoop loop;
  for (int i = 0; i < n; ++i) {
    const Vec2 a = u.paper_vertices[i];
    const Vec2 b = u.paper_vertices[(i + 1) % n];
    loop.waypoints.push_back(a);
    auto& ts = detours[i];
    std::sort(ts.begin(), ts.end());
    const Vec2 dir = normalized(b - a);
    for (double t : ts) {
      const Vec2 p = a + (b - a) * t;
      Vec2 nrm{-dir.y, dir.x};
      if (dot(nrm, u.apex - p) < 0) nrm = -nrm;
      // Stay inside the wedge: keep clear of both bounding creases and the apex.
      const double wedge_room = std::min({point_segment_distance(p, Segment2{u.apex, a}),
                                          point_segment_distance(p, Segment2{u.apex, b}),
                                          distance(p, u.apex)});
      const double eps = std::min(0.25 * clearance * u.scale, 0.5 * wedge_room);
      for (int k = 0; k <= kDetourSegments; ++k) {
        const double alpha = std::numbers::pi * (1.0 - static_cast<double>(k) / kDetourSegments);
        loop.waypoints.push_back(p + (dir * std::cos(alpha) + nrm * std::sin(alpha)) * eps);
      }
    }
  }
  validate_loop(loop, tol);
  return loop;
}

Construction construct_from_sticks(const StickDiagram& s, const Tolerance& tol) {
  validate_sticks(s, tol);
  Construction out;
  const Vec2 q0 = choose_apex(s, tol);
  out.cone = solve_apex_height(s, q0, tol);
  out.unfolding = unfold_to_pattern(out.cone, tol);
  out.folding = build_cone_folding(out.cone, out.unfolding, tol);
  out.loop = loop_with_crossings(out.cone, out.unfolding, tol);
  return out;
}

}  // namespace orikami
