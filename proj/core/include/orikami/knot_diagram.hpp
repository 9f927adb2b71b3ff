#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "orikami/geometry.hpp"

namespace orikami {

/// One crossing of an oriented diagram. Edge labels are 0-based; every label
/// appears exactly once as an incoming and once as an outgoing end.
struct Crossing {
  int under_in = 0;
  int under_out = 0;
  int over_in = 0;
  int over_out = 0;
  int sign = 1;  // +1 right-handed, -1 left-handed

  /// Labels in counter-clockwise order starting from the incoming under end,
  /// i.e. the PD tuple (0-based).
  std::array<int, 4> ccw() const {
    return sign > 0 ? std::array<int, 4>{under_in, over_out, under_out, over_in}
                    : std::array<int, 4>{under_in, over_in, under_out, over_out};
  }
  bool operator==(const Crossing&) const = default;
};

using PDCode = std::vector<std::array<int, 4>>;

/// A (possibly empty) oriented knot or link diagram.
class KnotDiagram {
 public:
  KnotDiagram() = default;
  /// Validates label usage and relabels edges canonically along the traversal.
  explicit KnotDiagram(std::vector<Crossing> crossings);

  /// Builds a diagram from PD notation X[a,b,c,d] (labels are arbitrary ints,
  /// a is the incoming under end, listed counter-clockwise).
  static KnotDiagram from_pd(const PDCode& pd);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  int writhe() const noexcept;

  /// PD code with 1-based labels.
  PDCode pd_code() const;

  /// Components in the traversal; 1 for a knot (and for the empty diagram).
  int component_count() const noexcept { return components_; }

  /// Signed Gauss sequence: +(k+1) when passing crossing k over, -(k+1) under.
  std::vector<int> gauss_code() const;

  /// Where an edge label ends / starts: crossing index and CCW position 0..3.
  struct End {
    int crossing;
    int position;
  };
  End head(int label) const;  // incoming end
  End tail(int label) const;  // outgoing end

  /// Faces of the diagram on the sphere, each a cycle of (crossing, position)
  /// darts; the edge leaving through that position is on the boundary.
  std::vector<std::vector<End>> faces() const;

  /// Mirror image: every crossing switched.
  KnotDiagram mirrored() const;

  bool operator==(const KnotDiagram&) const = default;

 private:
  void canonicalize();

  std::vector<Crossing> crossings_;
  int components_ = 1;
};

struct SpatialPolyline;

/// Projects a closed injective polyline along a generic direction derived from
/// `seed` and reads off crossings with over/under and signs.
KnotDiagram diagram_from_polyline(const SpatialPolyline& poly, std::uint64_t seed,
                                  const Tolerance& tol = kDefaultTolerance);

/// Same, along a caller-supplied direction (which must be regular).
KnotDiagram diagram_from_polyline_along(std::span<const Vec3> closed_polyline, Vec3 direction,
                                        const Tolerance& tol = kDefaultTolerance);

}  // namespace orikami
