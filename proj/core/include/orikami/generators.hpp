#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orikami/folding.hpp"
#include "orikami/geometry.hpp"

namespace orikami {

/// Line through `point` with direction `direction`, in paper coordinates.
struct Line2 {
  Vec2 point;
  Vec2 direction;
};

/// Folding of a chord pattern (every crease runs from boundary to boundary).
/// `root_face` keeps the identity map. Crease c runs from vertex first to
/// second; crossing it towards its left side rotates by angles[c] about the
/// crease image. Throws DomainError if the pattern has an interior vertex.
Folding fold_along_chords(const CreasePattern& pattern, const std::vector<double>& angles,
                          int root_face = 0, const Tolerance& tol = kDefaultTolerance);

/// Signed dihedral rotation across each crease of a chord pattern, in the
/// convention of fold_along_chords.
std::vector<double> chord_fold_angles(const Folding& f);

bool is_chord_pattern(const CreasePattern& pattern, const Tolerance& tol = kDefaultTolerance);

/// One crease along `axis`; the side away from the origin corner rotates by theta.
Folding single_crease(double theta, const Line2& axis, const Tolerance& tol = kDefaultTolerance);

inline constexpr int kMaxSimpleFolds = 6;
inline constexpr int kSimpleFoldAttempts = 100;

/// k non-crossing random chords with dihedral angles in (0.1, pi - 0.1),
/// resampled until the folding is injective.
Folding simple_fold_sequence(std::uint64_t seed, int k, const Tolerance& tol = kDefaultTolerance);

/// Random star-shaped (hence simple) loop with `vertices` waypoints.
PaperLoop random_loop(std::uint64_t seed, int vertices = 8,
                      const Tolerance& tol = kDefaultTolerance);

struct TorusParams {
  int n = 0;  // T(2, 2n+3)
  double tooth_width = 0.04;
  double tooth_depth = 0.15;
  double margin = 0.05;
};

/// Two parallel creases splitting the square into three panels.
inline constexpr double kTorusLeftCrease = 1.0 / 3.0;
inline constexpr double kTorusRightCrease = 2.0 / 3.0;

/// Two-crease folding with a loop whose image is the torus knot T(2, 2n+3).
std::pair<Folding, PaperLoop> torus_folding(const TorusParams& p,
                                            const Tolerance& tol = kDefaultTolerance);

/// Improper folding: a kite A = (0,0.4) (0.4,1) (1,0.6) (0.6,0) folded flat
/// along its diagonal, with corner flaps B (top left) and C (bottom right)
/// whose images cross transversally. Any path from B to C crosses A.
Folding improper_fixture();

/// Points of the fixture's flap regions.
bool in_fixture_region_b(Vec2 p);
bool in_fixture_region_c(Vec2 p);

/// The fixture with flap B (or C) swung below the paper, clear of
/// everything else. `strip` is 'B' or 'C'.
Folding improper_fixture_without(char strip);

}  // namespace orikami
