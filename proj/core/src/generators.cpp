#include "orikami/generators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <optional>
#include <random>

#include "orikami/analysis.hpp"
#include "orikami/error.hpp"

namespace orikami {

namespace {

bool on_square_boundary(Vec2 p, double eps) {
  return p.x <= eps || p.x >= 1.0 - eps || p.y <= eps || p.y >= 1.0 - eps;
}

Vec2 face_centroid(const CreasePattern& cp, int face) {
  Vec2 c{};
  const auto poly = cp.face_polygon(face);
  for (const Vec2& p : poly) c = c + p;
  return c * (1.0 / static_cast<double>(poly.size()));
}

RigidEmbedding rotated(const RigidEmbedding& m, Vec3 origin, Vec3 axis, double angle) {
  const Vec3 zero{};
  return {rotate_about_axis(m.col_x, zero, axis, angle),
          rotate_about_axis(m.col_y, zero, axis, angle),
          rotate_about_axis(m.translation, origin, axis, angle)};
}

struct ChordFrame {
  Vec2 from;
  Vec2 dir;     // unit, along the crease
  Vec2 normal;  // unit, to the left of dir
};

ChordFrame chord_frame(const CreasePattern& cp, int c) {
  const Vec2 a = cp.vertices[cp.crease_edges[c].first];
  const Vec2 b = cp.vertices[cp.crease_edges[c].second];
  const Vec2 d = normalized(b - a);
  return {a, d, {-d.y, d.x}};
}

// Clip a line to the unit square (Liang-Barsky).
std::optional<Segment2> clip_to_square(const Line2& line) {
  const Vec2 d = line.direction;
  double t0 = -1e9, t1 = 1e9;
  const double p[4] = {-d.x, d.x, -d.y, d.y};
  const double q[4] = {line.point.x, 1.0 - line.point.x, line.point.y, 1.0 - line.point.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0) return std::nullopt;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
  }
  if (t0 >= t1) return std::nullopt;
  auto snap = [](Vec2 v) { return Vec2{std::clamp(v.x, 0.0, 1.0), std::clamp(v.y, 0.0, 1.0)}; };
  return Segment2{snap(line.point + d * t0), snap(line.point + d * t1)};
}

}  // namespace

bool is_chord_pattern(const CreasePattern& cp, const Tolerance& tol) {
  for (const auto& [u, v] : cp.crease_edges) {
    if (!on_square_boundary(cp.vertices[u], tol.geom) ||
        !on_square_boundary(cp.vertices[v], tol.geom)) {
      return false;
    }
  }
  return true;
}

Folding fold_along_chords(const CreasePattern& cp, const std::vector<double>& angles,
                          int root_face, const Tolerance& tol) {
  if (!is_chord_pattern(cp, tol)) {
    throw DomainError("fold_along_chords: crease pattern has an interior vertex");
  }
  if (angles.size() != cp.crease_edges.size()) {
    throw DomainError("fold_along_chords: need one angle per crease");
  }
  const int nf = static_cast<int>(cp.faces.size());
  if (root_face < 0 || root_face >= nf) throw DomainError("fold_along_chords: bad root face");

  std::vector<std::optional<RigidEmbedding>> maps(nf);
  maps[root_face] = RigidEmbedding::identity();
  std::deque<int> queue{root_face};
  while (!queue.empty()) {
    const int a = queue.front();
    queue.pop_front();
    for (int c = 0; c < static_cast<int>(cp.crease_edges.size()); ++c) {
      const auto fs = cp.faces_of_crease(c);
      if (fs.size() != 2 || (fs[0] != a && fs[1] != a)) continue;
      const int b = fs[0] == a ? fs[1] : fs[0];
      if (maps[b]) continue;
      const ChordFrame fr = chord_frame(cp, c);
      const bool to_left = dot(face_centroid(cp, b) - fr.from, fr.normal) > 0;
      const RigidEmbedding& ma = *maps[a];
      maps[b] = rotated(ma, ma.apply(fr.from), ma.apply_linear(fr.dir),
                        to_left ? angles[c] : -angles[c]);
      queue.push_back(b);
    }
  }
  std::vector<RigidEmbedding> out;
  for (auto& m : maps) {
    if (!m) throw DomainError("fold_along_chords: face not reachable across creases");
    out.push_back(*m);
  }
  return Folding(cp, std::move(out));
}

std::vector<double> chord_fold_angles(const Folding& f) {
  const CreasePattern& cp = f.pattern;
  std::vector<double> out;
  for (int c = 0; c < static_cast<int>(cp.crease_edges.size()); ++c) {
    const auto fs = cp.faces_of_crease(c);
    const ChordFrame fr = chord_frame(cp, c);
    int right = fs[0], left = fs[1];
    if (dot(face_centroid(cp, right) - fr.from, fr.normal) > 0) std::swap(left, right);
    const RigidEmbedding& mr = f.face_maps[right];
    const RigidEmbedding& ml = f.face_maps[left];
    const Vec3 axis = mr.apply_linear(fr.dir);
    const Vec3 a = mr.apply_linear(fr.normal);
    const Vec3 b = ml.apply_linear(fr.normal);
    out.push_back(std::atan2(dot(axis, cross(a, b)), dot(a, b)));
  }
  return out;
}

Folding single_crease(double theta, const Line2& axis, const Tolerance& tol) {
  if (!(theta > 0.0) || theta > std::numbers::pi + tol.angle) {
    throw DomainError("single_crease: theta must lie in (0, pi]");
  }
  if (axis.direction.norm() <= tol.geom) throw DomainError("single_crease: zero axis direction");
  const auto seg = clip_to_square({axis.point, normalized(axis.direction)});
  if (!seg || seg->length() <= tol.geom ||
      on_square_boundary(seg->at(0.5), tol.geom)) {
    throw DomainError("single_crease: axis does not cross the square");
  }
  const CreasePattern cp = build_pattern({seg->a, seg->b}, {{0, 1}}, tol);

  int root = -1;
  for (Vec2 corner : {Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}, Vec2{1, 1}}) {
    if (point_segment_distance(corner, *seg) > tol.geom) {
      root = cp.face_containing(corner, tol.geom).value_or(-1);
      break;
    }
  }
  if (root < 0) throw DomainError("single_crease: no fixed side");
  const int moving = 1 - root;
  Folding f = fold_along_chords(cp, {theta}, root, tol);
  // Lift the moving side towards +z.
  if (f.face_maps[moving].apply(face_centroid(cp, moving)).z < 0) {
    f = fold_along_chords(cp, {-theta}, root, tol);
  }
  return f;
}

Folding simple_fold_sequence(std::uint64_t seed, int k, const Tolerance& tol) {
  if (k < 0 || k > kMaxSimpleFolds) {
    throw DomainError("simple_fold_sequence: fold count must lie in 0.." +
                      std::to_string(kMaxSimpleFolds));
  }
  if (k == 0) return Folding::identity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.1, std::numbers::pi - 0.1);
  constexpr double kClearance = 0.04;

  for (int attempt = 0; attempt < kSimpleFoldAttempts; ++attempt) {
    std::vector<Segment2> chords;
    for (int tries = 0; static_cast<int>(chords.size()) < k && tries < 500; ++tries) {
      const Vec2 p{0.1 + 0.8 * unit(rng), 0.1 + 0.8 * unit(rng)};
      const double phi = std::numbers::pi * unit(rng);
      const auto seg = clip_to_square({p, {std::cos(phi), std::sin(phi)}});
      if (!seg || seg->length() < 0.2) continue;
      bool ok = true;
      for (Vec2 corner : {Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}, Vec2{1, 1}}) {
        ok = ok && distance(corner, seg->a) > kClearance && distance(corner, seg->b) > kClearance;
      }
      for (const Segment2& other : chords) {
        ok = ok && std::holds_alternative<intersection::None>(segment_intersect(*seg, other, tol));
        for (Vec2 e : {other.a, other.b}) {
          ok = ok && point_segment_distance(e, *seg) > kClearance;
        }
        for (Vec2 e : {seg->a, seg->b}) {
          ok = ok && point_segment_distance(e, other) > kClearance;
        }
      }
      if (ok) chords.push_back(*seg);
    }
    if (static_cast<int>(chords.size()) < k) continue;

    std::vector<Vec2> verts;
    std::vector<Edge> creases;
    std::vector<double> angles;
    for (const Segment2& s : chords) {
      const int i = static_cast<int>(verts.size());
      verts.push_back(s.a);
      verts.push_back(s.b);
      creases.push_back({i, i + 1});
      angles.push_back((unit(rng) < 0.5 ? -1.0 : 1.0) * angle(rng));
    }
    const CreasePattern cp = build_pattern(std::move(verts), std::move(creases), tol);
    Folding f = fold_along_chords(cp, angles, 0, tol);
    if (is_injective(f, tol)) return f;
  }
  throw GenerationError("simple_fold_sequence: no injective folding within " +
                        std::to_string(kSimpleFoldAttempts) + " attempts");
}

PaperLoop random_loop(std::uint64_t seed, int vertices, const Tolerance& tol) {
  if (vertices < 3) throw DomainError("random_loop: need at least 3 waypoints");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Vec2 c{0.15 + 0.7 * unit(rng), 0.15 + 0.7 * unit(rng)};
    std::vector<double> phis(vertices);
    for (double& phi : phis) phi = 2.0 * std::numbers::pi * unit(rng);
    std::sort(phis.begin(), phis.end());
    PaperLoop loop;
    for (double phi : phis) {
      const Vec2 d{std::cos(phi), std::sin(phi)};
      const auto seg = clip_to_square({c, d});
      const double reach = seg ? distance(c, seg->b) : 0.0;
      loop.waypoints.push_back(c + d * (reach * (0.1 + 0.85 * unit(rng))));
    }
    try {
      validate_loop(loop, tol);
      return loop;
    } catch (const Error&) {
    }
  }
  throw GenerationError("random_loop: no simple loop found");
}

namespace {

// Outer panels stop this far short of a flat fold.
constexpr double kLeftGap = 0.4;
constexpr double kRightGap = 0.5;
// Side of the panel-crossing line on which the extra half twist sits.
constexpr double kSwapSide = 1.0;

Folding torus_base(const Tolerance& tol) {
  const CreasePattern cp = build_pattern({{kTorusLeftCrease, 0.0}, {kTorusLeftCrease, 1.0},
                                          {kTorusRightCrease, 0.0}, {kTorusRightCrease, 1.0}},
                                         {{0, 1}, {2, 3}}, tol);
  const double ca = std::cos(kLeftGap), sa = std::sin(kLeftGap);
  const double cb = std::cos(kRightGap), sb = std::sin(kRightGap);
  const double l = kTorusLeftCrease, r = kTorusRightCrease;
  std::vector<RigidEmbedding> maps(cp.faces.size());
  auto face_at = [&](Vec2 p) {
    const auto f = cp.face_containing(p, tol.geom);
    if (!f) throw GenerationError("torus: panel lookup failed");
    return *f;
  };
  maps[face_at({l / 2, 0.5})] = {{-ca, 0, -sa}, {0, 1, 0}, {l + l * ca, 0, l * sa}};
  maps[face_at({(l + r) / 2, 0.5})] = RigidEmbedding::identity();
  maps[face_at({(r + 1) / 2, 0.5})] = {{-cb, 0, sb}, {0, 1, 0}, {r + r * cb, 0, -r * sb}};
  return Folding(cp, std::move(maps));
}

}  // namespace

std::pair<Folding, PaperLoop> torus_folding(const TorusParams& p, const Tolerance& tol) {
  if (p.n < 0) throw DomainError("torus: n must be non-negative");
  for (double v : {p.tooth_width, p.tooth_depth, p.margin}) {
    if (!(v > 0.0 && v < 1.0)) throw DomainError("torus: parameters must lie in (0, 1)");
  }
  const double l = kTorusLeftCrease, r = kTorusRightCrease;
  const double ca = std::cos(kLeftGap), cb = std::cos(kRightGap);
  const double ta = std::tan(kLeftGap), tb = std::tan(kRightGap);
  // Seen from above, the outer panels cover [l, l + l*ca] and [r - l*cb, r];
  // left is above right beyond x_star.
  const double x_star = (l * ta + r * tb) / (ta + tb);
  const double left_reach = l + l * ca;
  const double right_reach = r - (1.0 - r) * cb;

  const double w = p.tooth_width, d = p.tooth_depth, m = p.margin;
  const double spine_l = x_star - 0.6 * d;
  const double spine_r = x_star + 0.6 * d;
  const double tip_l = spine_l + d * ca;
  const double tip_r = spine_r - d * cb;
  const double wrap = 0.5 * (right_reach + spine_l);
  const double descent = 0.5 * (spine_r + r);
  const double twist = std::min(0.03, 0.5 * (tip_l - x_star));
  const double swap_x = x_star + kSwapSide * twist;

  const double usable = 1.0 - 6.0 * m;
  const double pitch = usable / (p.n + 1);
  const bool fits = spine_l > l + 0.01 && spine_r < r - 0.01 && spine_r < left_reach - 0.01 &&
                    spine_l > right_reach + 0.02 && tip_l > x_star + 0.01 &&
                    tip_r < x_star - 0.01 && tip_l < spine_r - 0.01 && tip_r > spine_l + 0.01 &&
                    pitch >= 2.5 * w - 1e-12;
  if (!fits) throw GenerationError("torus: teeth do not fit for these parameters");

  // Seen-from-above coordinates back to the paper.
  auto on_left = [&](double X, double Y) { return Vec2{l - (X - l) / ca, Y}; };
  auto on_right = [&](double X, double Y) { return Vec2{r + (r - X) / cb, Y}; };

  PaperLoop loop;
  auto& pts = loop.waypoints;
  pts.push_back({l, m / 2});
  pts.push_back(on_left(spine_l, m));
  for (int k = 0; k <= p.n; ++k) {
    const double b = 2 * m + k * pitch + 0.5 * (pitch - 1.5 * w);
    pts.push_back(on_left(spine_l, b));
    pts.push_back(on_left(tip_l, b));
    pts.push_back(on_left(tip_l, b + w));
    pts.push_back(on_left(spine_l, b + w));
  }
  pts.push_back(on_left(spine_l, 1 - 4 * m));
  pts.push_back(on_left(swap_x, 1 - 3.25 * m));
  pts.push_back(on_left(spine_r, 1 - 2.5 * m));
  pts.push_back({l, 1 - m / 2});
  pts.push_back({r, 1 - m / 2});
  pts.push_back(on_right(descent, 1 - m));
  pts.push_back(on_right(descent, 1.5 * m));
  pts.push_back(on_right(spine_r, 1.5 * m));
  for (int k = 0; k <= p.n; ++k) {
    const double b = 2 * m + k * pitch + 0.5 * (pitch - 1.5 * w) + 0.5 * w;
    pts.push_back(on_right(spine_r, b));
    pts.push_back(on_right(tip_r, b));
    pts.push_back(on_right(tip_r, b + w));
    pts.push_back(on_right(spine_r, b + w));
  }
  pts.push_back(on_right(spine_r, 1 - 4 * m));
  pts.push_back(on_right(swap_x, 1 - 3.25 * m));
  pts.push_back(on_right(spine_l, 1 - 2.5 * m));
  pts.push_back(on_right(wrap, 1 - m / 4));
  pts.push_back(on_right(wrap, m / 4));
  pts.push_back({r, m / 2});
  validate_loop(loop, tol);
  return {torus_base(tol), std::move(loop)};
}

namespace {

// Kite A = P R Q S with diagonal D = PQ, folded flat so its halves coincide.
// B (top-left corner) hangs off PR and C (bottom-right corner) off QS; the
// two remaining corners are folded flat onto A. Crease order: D, B, TR, BL, C.
Folding fixture_with(double flap_b, double flap_c) {
  const double pi = std::numbers::pi;
  const CreasePattern cp = build_pattern({{0.0, 0.4}, {1.0, 0.6}, {0.4, 1.0}, {0.6, 0.0}},
                                         {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}});
  const int root = cp.face_containing({0.5, 0.75}, kDefaultTolerance.geom).value();
  return fold_along_chords(cp, {pi, flap_b, pi, pi, flap_c}, root);
}

// Both flaps lean over A from opposite legs and pierce each other.
constexpr double kFlapB = 0.8 * std::numbers::pi;
constexpr double kFlapC = -0.8 * std::numbers::pi;

}  // namespace

Folding improper_fixture() { return fixture_with(kFlapB, kFlapC); }

bool in_fixture_region_b(Vec2 p) {
  return p.x >= 0.0 && p.y <= 1.0 && cross(Vec2{0.4, 0.6}, p - Vec2{0.0, 0.4}) > 0.0;
}

bool in_fixture_region_c(Vec2 p) {
  return p.x <= 1.0 && p.y >= 0.0 && cross(Vec2{0.4, 0.6}, p - Vec2{0.6, 0.0}) < 0.0;
}

Folding improper_fixture_without(char strip) {
  switch (strip) {
    case 'B': return fixture_with(-0.5 * std::numbers::pi, kFlapC);
    case 'C': return fixture_with(kFlapB, 0.5 * std::numbers::pi);
    default: throw DomainError("improper_fixture_without: strip must be 'B' or 'C'");
  }
}

}  // namespace orikami
