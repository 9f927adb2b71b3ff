#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "orikami/knotid.hpp"

namespace orikami {

namespace {

class LabelMerger {
 public:
  int find(int x) {
    auto it = parent_.find(x);
    if (it == parent_.end() || it->second == x) return x;
    const int r = find(it->second);
    parent_[x] = r;
    return r;
  }
  void merge(int keep, int drop) {
    const int a = find(keep);
    const int b = find(drop);
    if (a != b) parent_[b] = a;
  }

 private:
  std::map<int, int> parent_;
};

KnotDiagram rebuild(const std::vector<Crossing>& all, std::initializer_list<int> removed,
                    LabelMerger& merger) {
  std::vector<Crossing> kept;
  for (int x = 0; x < static_cast<int>(all.size()); ++x) {
    if (std::find(removed.begin(), removed.end(), x) != removed.end()) continue;
    Crossing k = all[x];
    k.under_in = merger.find(k.under_in);
    k.under_out = merger.find(k.under_out);
    k.over_in = merger.find(k.over_in);
    k.over_out = merger.find(k.over_out);
    kept.push_back(k);
  }
  return KnotDiagram(std::move(kept));
}

std::optional<KnotDiagram> reidemeister_one(const KnotDiagram& d) {
  const auto& cs = d.crossings();
  for (int x = 0; x < d.crossing_count(); ++x) {
    const Crossing& k = cs[x];
    const bool under_to_over = k.under_out == k.over_in;
    const bool over_to_under = k.over_out == k.under_in;
    if (!under_to_over && !over_to_under) continue;
    LabelMerger m;
    if (under_to_over && !over_to_under) m.merge(k.under_in, k.over_out);
    if (over_to_under && !under_to_over) m.merge(k.over_in, k.under_out);
    return rebuild(cs, {x}, m);
  }
  return std::nullopt;
}

std::optional<KnotDiagram> reidemeister_two(const KnotDiagram& d) {
  const auto& cs = d.crossings();
  for (const auto& face : d.faces()) {
    if (face.size() != 2) continue;
    const int x = face[0].crossing;
    const int y = face[1].crossing;
    if (x == y) continue;
    const auto px = cs[x].ccw();
    const auto py = cs[y].ccw();
    const int l1 = px[face[0].position];
    const int l2 = py[face[1].position];
    // Position parity: even = under strand, odd = over strand.
    auto pos_of = [](const std::array<int, 4>& t, int label) {
      for (int p = 0; p < 4; ++p) {
        if (t[p] == label) return p;
      }
      return -1;
    };
    const int l1x = pos_of(px, l1), l1y = pos_of(py, l1);
    const int l2x = pos_of(px, l2), l2y = pos_of(py, l2);
    if (l1x < 0 || l1y < 0 || l2x < 0 || l2y < 0) continue;
    const bool l1_over = l1x % 2 == 1 && l1y % 2 == 1;
    const bool l1_under = l1x % 2 == 0 && l1y % 2 == 0;
    const bool l2_over = l2x % 2 == 1 && l2y % 2 == 1;
    const bool l2_under = l2x % 2 == 0 && l2y % 2 == 0;
    if (!((l1_over && l2_under) || (l1_under && l2_over))) continue;
    const int over_edge = l1_over ? l1 : l2;
    const int under_edge = l1_over ? l2 : l1;

    auto other_over = [&](const Crossing& k) {
      return k.over_in == over_edge ? k.over_out : k.over_in;
    };
    auto other_under = [&](const Crossing& k) {
      return k.under_in == under_edge ? k.under_out : k.under_in;
    };
    LabelMerger m;
    m.merge(other_over(cs[x]), other_over(cs[y]));
    m.merge(other_under(cs[x]), other_under(cs[y]));
    return rebuild(cs, {x, y}, m);
  }
  return std::nullopt;
}

}  // namespace

KnotDiagram simplify(const KnotDiagram& d) {
  KnotDiagram current = d;
  while (current.crossing_count() > 0) {
    if (auto r1 = reidemeister_one(current)) {
      current = std::move(*r1);
      continue;
    }
    if (auto r2 = reidemeister_two(current)) {
      current = std::move(*r2);
      continue;
    }
    break;
  }
  return current;
}

}  // namespace orikami
