#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orikami/geometry.hpp"
#include "orikami/planar_graph.hpp"

namespace orikami {

/// Plane straight-line graph on the unit square together with its faces.
///
/// `vertices` always contains the four square corners. Crease edges exclude
/// the square boundary; `faces` are counter-clockwise vertex cycles that
/// partition the square.
struct CreasePattern {
  std::vector<Vec2> vertices;
  std::vector<Edge> crease_edges;
  std::vector<std::vector<int>> faces;

  std::vector<Vec2> face_polygon(int face) const;
  double face_area(int face) const;
  /// First face whose closure contains p (within eps), if any.
  std::optional<int> face_containing(Vec2 p, double eps) const;
  /// Faces having the crease edge on their boundary (normally two).
  std::vector<int> faces_of_crease(int crease) const;
  /// True when the two faces share a crease edge.
  bool faces_adjacent(int a, int b) const;
};

/// Builds a crease pattern, adding the square corners and boundary edges and
/// extracting faces. Throws DomainError for vertices outside the square and
/// NonPlanarError for creases that meet anywhere but at a shared vertex.
CreasePattern build_pattern(std::vector<Vec2> vertices, std::vector<Edge> crease_edges,
                            const Tolerance& tol = kDefaultTolerance);

/// Piecewise-isometric map of the square: one rigid embedding per face.
struct Folding {
  CreasePattern pattern;
  std::vector<RigidEmbedding> face_maps;

  Folding() = default;
  Folding(CreasePattern p, std::vector<RigidEmbedding> maps);

  /// Identity folding of the square into the z = 0 plane.
  static Folding identity();

  std::vector<Vec3> face_image(int face) const;
};

struct ValidationReport {
  struct FaceDefect {
    int face;
    double defect;
  };
  struct CreaseDefect {
    int crease;
    double defect;
  };
  bool strict = false;
  std::vector<FaceDefect> face_defects;      // orthonormality violations
  std::vector<CreaseDefect> crease_defects;  // adjacent maps disagree on the crease
  std::vector<int> spurious_creases;         // strict: adjacent maps coincide
  double max_face_defect = 0.0;
  double max_crease_defect = 0.0;

  bool valid() const {
    return face_defects.empty() && crease_defects.empty() && spurious_creases.empty();
  }
};

ValidationReport validate_folding(const Folding& f, bool strict,
                                  const Tolerance& tol = kDefaultTolerance);

int crease_edge_count(const Folding& f);

/// Image of a paper point. Throws DomainError outside the square.
Vec3 fold_point(const Folding& f, Vec2 p, const Tolerance& tol = kDefaultTolerance);

/// Closed piecewise-linear simple curve in the square.
struct PaperLoop {
  std::vector<Vec2> waypoints;
  double length() const;
};

/// Throws DomainError unless the loop is simple, inside the square, and has
/// at least three distinct consecutive waypoints.
void validate_loop(const PaperLoop& loop, const Tolerance& tol = kDefaultTolerance);

struct SpatialPolyline {
  std::vector<Vec3> waypoints;
  bool injective = true;
  double length() const;
};

/// True when the closed polyline has no self-intersections or overlaps.
bool polyline_is_injective(std::span<const Vec3> closed_polyline,
                           const Tolerance& tol = kDefaultTolerance);

/// Image of a loop, subdivided at every crease crossing.
SpatialPolyline fold_loop(const Folding& f, const PaperLoop& loop,
                          const Tolerance& tol = kDefaultTolerance);

}  // namespace orikami
