#pragma once

#include <cstdint>

#include "orikami/folding.hpp"
#include "orikami/knot_diagram.hpp"
#include "orikami/polynomial.hpp"

namespace orikami {

/// Largest diagram the bracket state sum accepts; simplify first.
inline constexpr int kBracketCrossingBudget = 24;

/// Kauffman bracket <D> in the variable A, normalised so the empty diagram is 1.
/// Throws SizeError above `budget` crossings.
LaurentPolynomial kauffman_bracket(const KnotDiagram& d, int budget = kBracketCrossingBudget);

/// Jones polynomial in t, obtained from the writhe-normalised bracket with
/// t = A^-4.
LaurentPolynomial jones(const KnotDiagram& d, int budget = kBracketCrossingBudget);

struct AlexanderResult {
  /// Representative with lowest exponent 0 and positive leading coefficient.
  LaurentPolynomial normalized;
  /// Symmetric representative with value 1 at t = 1.
  LaurentPolynomial symmetric;
  std::int64_t determinant = 1;
};

/// Alexander polynomial from the Alexander matrix with one row and column
/// deleted. Throws UnsupportedError for multi-component diagrams.
AlexanderResult alexander(const KnotDiagram& d);

/// Greedy Reidemeister I / II reduction to a fixed point.
KnotDiagram simplify(const KnotDiagram& d);

struct CertificationReport {
  int crossing_count = 0;
  int writhe = 0;
  std::int64_t determinant = 1;
  LaurentPolynomial alexander{1};
  LaurentPolynomial jones{1};
  bool invariants_trivial = true;
  /// PD code of the simplified diagram (1-based labels).
  PDCode pd_code;
};

/// Diagram invariants after simplification.
CertificationReport certify_diagram(const KnotDiagram& d);

/// diagram_from_polyline -> simplify -> invariants. Deterministic in `seed`.
CertificationReport certify(const SpatialPolyline& poly, std::uint64_t seed,
                            const Tolerance& tol = kDefaultTolerance);

/// Invariant agreement: determinant, Alexander, and Jones up to mirror image.
bool same_knot_invariants(const CertificationReport& a, const CertificationReport& b);

}  // namespace orikami
