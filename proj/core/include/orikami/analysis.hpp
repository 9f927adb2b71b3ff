#pragma once

#include <string_view>
#include <vector>

#include "orikami/folding.hpp"
#include "orikami/geometry.hpp"

namespace orikami {

enum class IntersectionKind {
  SharedCrease,
  CoincidentOverlap,
  Touching,
  TransversalCrossing,
};

std::string_view to_string(IntersectionKind k);

struct IntersectionFinding {
  int face_a = 0;  // face_a < face_b
  int face_b = 0;
  IntersectionKind kind = IntersectionKind::SharedCrease;
  /// Degenerates to a point when a == b.
  Segment3 witness;
};

/// Pairwise intersections of the face images, one finding per intersecting
/// pair (the most severe kind), ordered by face pair.
std::vector<IntersectionFinding> self_intersections(const Folding& f,
                                                    const Tolerance& tol = kDefaultTolerance);

bool is_injective(const Folding& f, const Tolerance& tol = kDefaultTolerance);

enum class Properness {
  ProperInjective,
  ProperFlatContact,
  ImproperTransversal,
  Unknown,
};

std::string_view to_string(Properness p);

struct PropernessVerdict {
  Properness verdict = Properness::Unknown;
  std::vector<IntersectionFinding> findings;
};

/// Flat contact is only accepted for chord patterns (every crease runs
/// boundary to boundary) whose flat creases can be opened slightly into an
/// injective folding.
PropernessVerdict properness_verdict(const Folding& f, const Tolerance& tol = kDefaultTolerance);

}  // namespace orikami
