#include "orikami/planar_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "orikami/error.hpp"

namespace orikami {

std::vector<std::vector<int>> planar_faces(std::span<const Vec2> points,
                                           std::span<const Edge> edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<int>> around(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw DomainError("planar_faces: invalid edge");
    }
    around[u].push_back(v);
    around[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = around[v];
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
      const Vec2 da = points[a] - points[v];
      const Vec2 db = points[b] - points[v];
      return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
    });
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }

  // Half-edge (u -> v) is identified by (u, index of v in around[u]).
  std::map<std::pair<int, int>, bool> visited;
  auto index_of = [&](int at, int target) {
    const auto& nb = around[at];
    return static_cast<int>(std::find(nb.begin(), nb.end(), target) - nb.begin());
  };

  std::vector<std::vector<int>> faces;
  for (int u = 0; u < n; ++u) {
    for (int k = 0; k < static_cast<int>(around[u].size()); ++k) {
      if (visited[{u, k}]) continue;
      std::vector<int> cycle;
      int a = u;
      int ak = k;
      while (!visited[{a, ak}]) {
        visited[{a, ak}] = true;
        cycle.push_back(a);
        const int b = around[a][ak];
        const int deg = static_cast<int>(around[b].size());
        const int back = index_of(b, a);
        a = b;
        ak = (back - 1 + deg) % deg;
      }
      std::vector<Vec2> poly;
      poly.reserve(cycle.size());
      for (int idx : cycle) poly.push_back(points[idx]);
      if (signed_area(poly) <= 0.0) continue;  // unbounded face or a sliver
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      faces.push_back(std::move(cycle));
    }
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace orikami
