#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "orikami/error.hpp"
#include "orikami/knotid.hpp"

namespace orikami {

namespace {

// Open ends of partially smoothed arcs: label -> label at the other end.
using Matching = std::map<int, int>;

// Joins the half-edges x and y inside one smoothing; returns loops closed.
int join(Matching& m, int x, int y) {
  if (x == y) return 1;
  const auto ix = m.find(x);
  const auto iy = m.find(y);
  const bool ox = ix != m.end();
  const bool oy = iy != m.end();
  if (ox && oy) {
    const int a = ix->second;
    const int b = iy->second;
    m.erase(x);
    m.erase(y);
    if (a == y) return 1;
    m[a] = b;
    m[b] = a;
    return 0;
  }
  if (ox || oy) {
    const int consumed = ox ? x : y;
    const int fresh = ox ? y : x;
    const int a = m.at(consumed);
    m.erase(consumed);
    m[a] = fresh;
    m[fresh] = a;
    return 0;
  }
  m[x] = y;
  m[y] = x;
  return 0;
}

std::vector<int> key_of(const Matching& m) {
  std::vector<int> k;
  k.reserve(m.size());
  for (const auto& [a, b] : m) {
    if (a < b) {
      k.push_back(a);
      k.push_back(b);
    }
  }
  return k;
}

Matching from_key(const std::vector<int>& k) {
  Matching m;
  for (std::size_t i = 0; i + 1 < k.size(); i += 2) {
    m[k[i]] = k[i + 1];
    m[k[i + 1]] = k[i];
  }
  return m;
}

// Crossing order keeping the frontier of open labels small.
std::vector<int> processing_order(const KnotDiagram& d) {
  const int c = d.crossing_count();
  std::vector<int> order;
  std::vector<bool> used(c, false);
  std::map<int, int> seen_count;
  for (int step = 0; step < c; ++step) {
    int best = -1;
    int best_score = -1;
    for (int x = 0; x < c; ++x) {
      if (used[x]) continue;
      int score = 0;
      for (int l : d.crossings()[x].ccw()) score += seen_count[l] == 1 ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = x;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (int l : d.crossings()[best].ccw()) ++seen_count[l];
  }
  return order;
}

// (-A^2 - A^-2)
LaurentPolynomial loop_value() { return LaurentPolynomial(-2, {-1, 0, 0, 0, -1}); }

}  // namespace

LaurentPolynomial kauffman_bracket(const KnotDiagram& d, int budget) {
  const int c = d.crossing_count();
  if (c > budget) {
    throw SizeError("kauffman_bracket: " + std::to_string(c) + " crossings exceed the budget of " +
                    std::to_string(budget) + "; simplify the diagram first");
  }
  if (c == 0) return LaurentPolynomial(1);

  const LaurentPolynomial delta = loop_value();
  // State sum organised crossing by crossing; states with the same open-end
  // matching are merged, which is the full 2^c sum regrouped.
  std::map<std::vector<int>, LaurentPolynomial> states{{{}, LaurentPolynomial(1)}};
  for (int x : processing_order(d)) {
    const auto t = d.crossings()[x].ccw();
    std::map<std::vector<int>, LaurentPolynomial> next;
    for (const auto& [key, value] : states) {
      // A-smoothing joins (0,1),(2,3); B-smoothing joins (0,3),(1,2).
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        Matching m = from_key(key);
        int loops = 0;
        if (smoothing == 0) {
          loops += join(m, t[0], t[1]);
          loops += join(m, t[2], t[3]);
        } else {
          loops += join(m, t[0], t[3]);
          loops += join(m, t[1], t[2]);
        }
        LaurentPolynomial v = value.shifted(smoothing == 0 ? 1 : -1);
        for (int i = 0; i < loops; ++i) v *= delta;
        next[key_of(m)] += v;
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1 || !states.begin()->first.empty()) {
    throw NumericError("kauffman_bracket: unclosed arcs remain");
  }
  // Every state closed at least one loop; the bracket counts loops - 1.
  return states.begin()->second.exact_divide(delta);
}

LaurentPolynomial jones(const KnotDiagram& d, int budget) {
  const LaurentPolynomial bracket = kauffman_bracket(d, budget);
  const int w = d.writhe();
  // (-A^3)^-w
  const LaurentPolynomial factor = LaurentPolynomial::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
  return (bracket * factor).exponents_divided(-4);
}

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

// Fraction-free Gaussian elimination (Bareiss) over Z[t].
LaurentPolynomial bareiss_determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPolynomial(1);
  LaurentPolynomial prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_divide(prev);
      }
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

AlexanderResult alexander(const KnotDiagram& d) {
  if (d.component_count() != 1) {
    throw UnsupportedError("alexander: only single-component diagrams are supported");
  }
  AlexanderResult r;
  const int c = d.crossing_count();
  if (c == 0) {
    r.normalized = r.symmetric = LaurentPolynomial(1);
    r.determinant = 1;
    return r;
  }
  // Arcs: edges glued through over-passes.
  std::vector<int> parent(static_cast<std::size_t>(2 * c));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& k : d.crossings()) {
    parent[find_root(parent, k.over_in)] = find_root(parent, k.over_out);
  }
  std::map<int, int> arc_index;
  for (int e = 0; e < 2 * c; ++e) arc_index.emplace(find_root(parent, e), 0);
  int next = 0;
  for (auto& [root, idx] : arc_index) idx = next++;
  if (next != c) throw NumericError("alexander: arc count differs from crossing count");
  auto arc = [&](int e) { return arc_index.at(find_root(parent, e)); };

  const LaurentPolynomial one_minus_t(0, {1, -1});
  const LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
  PolyMatrix m(c, std::vector<LaurentPolynomial>(c));
  for (int x = 0; x < c; ++x) {
    const auto& k = d.crossings()[x];
    const int over = arc(k.over_in);
    const int in = arc(k.under_in);
    const int out = arc(k.under_out);
    m[x][over] += one_minus_t;
    if (k.sign > 0) {
      m[x][in] += t;
      m[x][out] += LaurentPolynomial(-1);
    } else {
      m[x][in] += LaurentPolynomial(-1);
      m[x][out] += t;
    }
  }
  PolyMatrix minor(c - 1, std::vector<LaurentPolynomial>(c - 1));
  for (int i = 0; i + 1 < c; ++i) {
    for (int j = 0; j + 1 < c; ++j) minor[i][j] = m[i][j];
  }
  LaurentPolynomial delta = bareiss_determinant(std::move(minor));
  if (delta.is_zero()) throw NumericError("alexander: vanishing Alexander polynomial");
  delta = delta.shifted(-delta.low_exponent());
  if (delta.leading_coefficient() < 0) delta = -delta;
  const std::int64_t at_one = delta.evaluate(1);
  if (at_one != 1 && at_one != -1) {
    throw NumericError("alexander: polynomial does not satisfy |Delta(1)| = 1");
  }
  r.normalized = delta;
  const int span = delta.high_exponent();
  if (span % 2 != 0) throw NumericError("alexander: odd span for a knot");
  r.symmetric = delta.shifted(-span / 2);
  if (at_one < 0) r.symmetric = -r.symmetric;
  r.determinant = std::llabs(delta.evaluate(-1));
  return r;
}

}  // namespace orikami
