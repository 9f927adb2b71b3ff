#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orikami/geometry.hpp"

namespace orikami {

using Edge = std::pair<int, int>;

/// Bounded faces of a plane straight-line graph, each a counter-clockwise
/// cycle of vertex indices rotated to start at its smallest index; faces are
/// sorted lexicographically. Edges must only meet at shared endpoints.
std::vector<std::vector<int>> planar_faces(std::span<const Vec2> points,
                                           std::span<const Edge> edges);

}  // namespace orikami
