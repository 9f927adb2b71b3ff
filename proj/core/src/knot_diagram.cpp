#include "orikami/knot_diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "orikami/error.hpp"
#include "orikami/folding.hpp"

namespace orikami {

namespace {

enum class Role { kUnder, kOver };

struct InEnd {
  int crossing = -1;
  Role role = Role::kUnder;
};

}  // namespace

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  canonicalize();
}

void KnotDiagram::canonicalize() {
  const int c = crossing_count();
  if (c == 0) {
    components_ = 1;
    return;
  }
  std::map<int, InEnd> in_end;
  std::map<int, int> out_count;
  for (int x = 0; x < c; ++x) {
    const Crossing& k = crossings_[x];
    if (k.sign != 1 && k.sign != -1) throw DomainError("crossing sign must be +1 or -1");
    for (auto [label, role] : {std::pair{k.under_in, Role::kUnder}, {k.over_in, Role::kOver}}) {
      if (in_end.contains(label)) {
        throw DomainError("diagram: label " + std::to_string(label) + " enters twice");
      }
      in_end[label] = {x, role};
    }
    ++out_count[k.under_out];
    ++out_count[k.over_out];
  }
  for (const auto& [label, count] : out_count) {
    if (count != 1 || !in_end.contains(label)) {
      throw DomainError("diagram: label " + std::to_string(label) + " is not a single edge");
    }
  }
  if (in_end.size() != out_count.size()) throw DomainError("diagram: dangling edge label");

  std::map<int, int> relabel;
  int next_label = 0;
  components_ = 0;
  for (int x = 0; x < c; ++x) {
    for (int start : {crossings_[x].under_in, crossings_[x].over_in}) {
      if (relabel.contains(start)) continue;
      ++components_;
      int e = start;
      while (!relabel.contains(e)) {
        relabel[e] = next_label++;
        const InEnd end = in_end.at(e);
        const Crossing& k = crossings_[end.crossing];
        e = end.role == Role::kUnder ? k.under_out : k.over_out;
      }
    }
  }
  for (auto& k : crossings_) {
    k.under_in = relabel.at(k.under_in);
    k.under_out = relabel.at(k.under_out);
    k.over_in = relabel.at(k.over_in);
    k.over_out = relabel.at(k.over_out);
  }
}

KnotDiagram KnotDiagram::from_pd(const PDCode& pd) {
  const int c = static_cast<int>(pd.size());
  // occurrences[label] = list of (crossing, position)
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int x = 0; x < c; ++x) {
    for (int p = 0; p < 4; ++p) occ[pd[x][p]].push_back({x, p});
  }
  for (const auto& [label, ends] : occ) {
    if (ends.size() != 2) {
      throw DomainError("PD code: label " + std::to_string(label) + " must appear exactly twice");
    }
  }
  // is_in[x][p]: 1 incoming, 0 outgoing, -1 unknown
  std::vector<std::array<int, 4>> is_in(c, {1, -1, 0, -1});
  auto other = [&](int x, int p) {
    const auto& ends = occ.at(pd[x][p]);
    return ends[0] == std::pair{x, p} ? ends[1] : ends[0];
  };
  auto propagate = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < c; ++x) {
        for (int p = 0; p < 4; ++p) {
          if (is_in[x][p] < 0) continue;
          const auto [ox, op] = other(x, p);
          const int want = 1 - is_in[x][p];
          if (is_in[ox][op] < 0) {
            is_in[ox][op] = want;
            changed = true;
          } else if (is_in[ox][op] != want) {
            throw DomainError("PD code: inconsistent orientation");
          }
        }
        for (auto [a, b] : {std::pair{1, 3}, {3, 1}}) {
          if (is_in[x][a] >= 0 && is_in[x][b] < 0) {
            is_in[x][b] = 1 - is_in[x][a];
            changed = true;
          }
        }
      }
    }
  };
  propagate();
  for (int x = 0; x < c; ++x) {
    if (is_in[x][1] >= 0) continue;
    // Over-only component: fall back to the consecutive-label convention.
    const int b = pd[x][1];
    const int d = pd[x][3];
    const bool d_to_b = (b - d == 1) || (d - b > 1);
    is_in[x][3] = d_to_b ? 1 : 0;
    is_in[x][1] = d_to_b ? 0 : 1;
    propagate();
  }

  std::map<int, int> dense;
  for (const auto& [label, ends] : occ) dense.emplace(label, static_cast<int>(dense.size()));
  std::vector<Crossing> out;
  out.reserve(c);
  for (int x = 0; x < c; ++x) {
    Crossing k;
    k.under_in = dense.at(pd[x][0]);
    k.under_out = dense.at(pd[x][2]);
    const bool pos3_in = is_in[x][3] == 1;
    k.over_in = dense.at(pos3_in ? pd[x][3] : pd[x][1]);
    k.over_out = dense.at(pos3_in ? pd[x][1] : pd[x][3]);
    k.sign = pos3_in ? 1 : -1;
    out.push_back(k);
  }
  return KnotDiagram(std::move(out));
}

int KnotDiagram::writhe() const noexcept {
  int w = 0;
  for (const auto& k : crossings_) w += k.sign;
  return w;
}

PDCode KnotDiagram::pd_code() const {
  PDCode pd;
  pd.reserve(crossings_.size());
  for (const auto& k : crossings_) {
    auto t = k.ccw();
    for (auto& v : t) ++v;
    pd.push_back(t);
  }
  return pd;
}

KnotDiagram::End KnotDiagram::head(int label) const {
  for (int x = 0; x < crossing_count(); ++x) {
    const auto& k = crossings_[x];
    if (k.under_in == label || k.over_in == label) {
      const auto t = k.ccw();
      for (int p = 0; p < 4; ++p) {
        if (t[p] == label && (p == 0 || (p == 1 && k.sign < 0) || (p == 3 && k.sign > 0))) {
          return {x, p};
        }
      }
    }
  }
  throw DomainError("head: unknown label " + std::to_string(label));
}

KnotDiagram::End KnotDiagram::tail(int label) const {
  for (int x = 0; x < crossing_count(); ++x) {
    const auto& k = crossings_[x];
    if (k.under_out == label || k.over_out == label) {
      const auto t = k.ccw();
      for (int p = 0; p < 4; ++p) {
        if (t[p] == label && (p == 2 || (p == 1 && k.sign > 0) || (p == 3 && k.sign < 0))) {
          return {x, p};
        }
      }
    }
  }
  throw DomainError("tail: unknown label " + std::to_string(label));
}

std::vector<int> KnotDiagram::gauss_code() const {
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(edge_count()));
  // Canonical labels follow the traversal, so label e ends at the e-th visit.
  for (int e = 0; e < edge_count(); ++e) {
    const End h = head(e);
    code.push_back(h.position == 0 ? -(h.crossing + 1) : (h.crossing + 1));
  }
  return code;
}

std::vector<std::vector<KnotDiagram::End>> KnotDiagram::faces() const {
  const int c = crossing_count();
  std::vector<std::array<int, 4>> pos(c);
  std::map<int, std::vector<End>> occ;
  for (int x = 0; x < c; ++x) {
    pos[x] = crossings_[x].ccw();
    for (int p = 0; p < 4; ++p) occ[pos[x][p]].push_back({x, p});
  }
  std::vector<std::array<bool, 4>> seen(c, {false, false, false, false});
  std::vector<std::vector<End>> faces;
  for (int x = 0; x < c; ++x) {
    for (int p = 0; p < 4; ++p) {
      if (seen[x][p]) continue;
      std::vector<End> face;
      End d{x, p};
      while (!seen[d.crossing][d.position]) {
        seen[d.crossing][d.position] = true;
        face.push_back(d);
        const auto& ends = occ.at(pos[d.crossing][d.position]);
        const End o = (ends[0].crossing == d.crossing && ends[0].position == d.position)
                          ? ends[1]
                          : ends[0];
        d = {o.crossing, (o.position + 3) % 4};
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

KnotDiagram KnotDiagram::mirrored() const {
  std::vector<Crossing> m = crossings_;
  for (auto& k : m) {
    std::swap(k.under_in, k.over_in);
    std::swap(k.under_out, k.over_out);
    k.sign = -k.sign;
  }
  return KnotDiagram(std::move(m));
}

KnotDiagram diagram_from_polyline_along(std::span<const Vec3> pts, Vec3 direction,
                                        const Tolerance& tol) {
  const std::size_t n = pts.size();
  if (n < 3) throw NotAKnotError("diagram_from_polyline: need at least 3 waypoints");
  const Vec3 d = normalized(direction);
  const auto [e1, e2] = projection_basis(d);
  std::vector<Vec2> p(n);
  std::vector<double> depth(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = {dot(pts[i], e1), dot(pts[i], e2)};
    depth[i] = dot(pts[i], d);
  }
  auto seg = [&](std::size_t i) { return Segment2{p[i], p[(i + 1) % n]}; };
  auto seg_depth = [&](std::size_t i, double t) {
    return depth[i] + (depth[(i + 1) % n] - depth[i]) * t;
  };

  struct Event {
    std::size_t segment;
    double t;
    int crossing;
    bool over;
  };
  struct Raw {
    Vec2 over_dir;
    Vec2 under_dir;
  };
  std::vector<Event> events;
  std::vector<Raw> raw;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      const auto r = segment_intersect(seg(i), seg(j), tol);
      if (std::holds_alternative<intersection::None>(r)) continue;
      const auto* pt = std::get_if<intersection::Point>(&r);
      if (pt == nullptr) throw NonGenericError("diagram_from_polyline: projection is not regular");
      const double di = seg_depth(i, pt->t_a);
      const double dj = seg_depth(j, pt->t_b);
      if (std::abs(di - dj) <= tol.geom) {
        throw NotAKnotError("diagram_from_polyline: polyline is not injective");
      }
      const bool i_over = di > dj;
      const int id = static_cast<int>(raw.size());
      const Vec2 di_dir = seg(i).b - seg(i).a;
      const Vec2 dj_dir = seg(j).b - seg(j).a;
      raw.push_back(i_over ? Raw{di_dir, dj_dir} : Raw{dj_dir, di_dir});
      events.push_back({i, pt->t_a, id, i_over});
      events.push_back({j, pt->t_b, id, !i_over});
    }
  }
  const int c = static_cast<int>(raw.size());
  if (c == 0) return {};
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.segment != b.segment ? a.segment < b.segment : a.t < b.t;
  });
  const int m = 2 * c;
  std::vector<Crossing> crossings(c);
  for (int k = 0; k < m; ++k) {
    const Event& ev = events[k];
    Crossing& x = crossings[ev.crossing];
    const int in = (k - 1 + m) % m;
    if (ev.over) {
      x.over_in = in;
      x.over_out = k;
    } else {
      x.under_in = in;
      x.under_out = k;
    }
  }
  for (int id = 0; id < c; ++id) {
    crossings[id].sign = cross(raw[id].over_dir, raw[id].under_dir) > 0 ? 1 : -1;
  }
  return KnotDiagram(std::move(crossings));
}

KnotDiagram diagram_from_polyline(const SpatialPolyline& poly, std::uint64_t seed,
                                  const Tolerance& tol) {
  if (!poly.injective) throw NotAKnotError("diagram_from_polyline: polyline is not injective");
  if (poly.waypoints.size() < 3) {
    throw NotAKnotError("diagram_from_polyline: need at least 3 waypoints");
  }
  const Vec3 d = generic_direction(poly.waypoints, seed, tol);
  return diagram_from_polyline_along(poly.waypoints, d, tol);
}

}  // namespace orikami
