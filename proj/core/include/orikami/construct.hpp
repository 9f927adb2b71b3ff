#pragma once

#include <utility>
#include <vector>

#include "orikami/folding.hpp"
#include "orikami/geometry.hpp"
#include "orikami/knot_diagram.hpp"

namespace orikami {

/// Edge i runs from vertices[i] to vertices[(i + 1) % n].
struct StickCrossing {
  int edge_a = 0;
  int edge_b = 0;
  int over = 0;  // edge_a or edge_b
};

struct StickDiagram {
  std::vector<Vec2> vertices;
  std::vector<StickCrossing> crossings;

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  Segment2 edge(int i) const;
};

/// A geometric crossing of two stick edges.
struct StickIntersection {
  int edge_a = 0;  // edge_a < edge_b
  int edge_b = 0;
  double t_a = 0.0;
  double t_b = 0.0;
  Vec2 point;
};

/// All transversal edge crossings, sorted by (edge_a, edge_b).
/// Throws NonGenericError on overlaps, touchings or collinear consecutive edges.
std::vector<StickIntersection> stick_intersections(const StickDiagram& s,
                                                   const Tolerance& tol = kDefaultTolerance);

/// Checks vertex count, genericity and that overrides match the crossings
/// one-to-one. Throws ConstructionError otherwise.
void validate_sticks(const StickDiagram& s, const Tolerance& tol = kDefaultTolerance);

/// Knot diagram read directly off the sticks and their overrides.
KnotDiagram reference_diagram(const StickDiagram& s, const Tolerance& tol = kDefaultTolerance);

/// Sum of the unsigned angles v_i Q v_{i+1} seen from Q = (q, z).
double angle_sum(const StickDiagram& s, const Vec2& q, double z);

struct ConeConstruction {
  Vec3 apex;
  std::vector<double> radii;   // |Q v_i|
  std::vector<double> thetas;  // angle v_i Q v_{i+1}
  StickDiagram sticks;

  double angle_residual() const;
};

Vec2 choose_apex(const StickDiagram& s, const Tolerance& tol = kDefaultTolerance);

ConeConstruction solve_apex_height(const StickDiagram& s, const Vec2& q0,
                                   const Tolerance& tol = kDefaultTolerance);

struct ConeUnfolding {
  CreasePattern pattern;
  double scale = 1.0;
  Vec2 apex{0.5, 0.5};
  std::vector<Vec2> paper_vertices;  // v'_i
  std::vector<int> wedge_faces;      // face index of wedge i (between v'_i and v'_{i+1})
};

/// Largest scaled radius; the cone fits in the square with a margin.
inline constexpr double kUnfoldRadius = 0.45;

ConeUnfolding unfold_to_pattern(const ConeConstruction& c,
                                const Tolerance& tol = kDefaultTolerance);

/// The spatial image is the cone scaled by `u.scale`.
Folding build_cone_folding(const ConeConstruction& c, const ConeUnfolding& u,
                           const Tolerance& tol = kDefaultTolerance);

/// Number of segments in each over-strand detour.
inline constexpr int kDetourSegments = 8;

PaperLoop loop_with_crossings(const ConeConstruction& c, const ConeUnfolding& u,
                              const Tolerance& tol = kDefaultTolerance);

/// Worst side-length mismatch between the unfolded triangles and their
/// spatial counterparts (in scaled units).
double congruence_defect(const ConeConstruction& c, const ConeUnfolding& u);

struct Construction {
  ConeConstruction cone;
  ConeUnfolding unfolding;
  Folding folding;
  PaperLoop loop;
};

Construction construct_from_sticks(const StickDiagram& s,
                                   const Tolerance& tol = kDefaultTolerance);

}  // namespace orikami
