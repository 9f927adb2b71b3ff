#include "orikami/knotid.hpp"

namespace orikami {

CertificationReport certify_diagram(const KnotDiagram& d) {
  const KnotDiagram s = simplify(d);
  const AlexanderResult a = alexander(s);
  CertificationReport r;
  r.crossing_count = s.crossing_count();
  r.writhe = s.writhe();
  r.determinant = a.determinant;
  r.alexander = a.normalized;
  r.jones = jones(s);
  r.invariants_trivial = r.determinant == 1 && r.alexander == LaurentPolynomial(1) &&
                         r.jones == LaurentPolynomial(1);
  r.pd_code = s.pd_code();
  return r;
}

CertificationReport certify(const SpatialPolyline& poly, std::uint64_t seed,
                            const Tolerance& tol) {
  return certify_diagram(diagram_from_polyline(poly, seed, tol));
}

bool same_knot_invariants(const CertificationReport& a, const CertificationReport& b) {
  return a.determinant == b.determinant && a.alexander == b.alexander &&
         (a.jones == b.jones || a.jones == b.jones.mirrored());
}

}  // namespace orikami
