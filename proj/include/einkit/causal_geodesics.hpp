#pragma once

#include "einkit/invisible_domain.hpp"

namespace einkit {

// A 2-plane of R^m stored as a Euclidean-orthonormal frame in a canonical
// form: the frame diagonalizes a fixed generic weight form restricted to the
// plane and each column has its dominant entry positive, so equal spans
// produce equal stored frames (within 1e-10). Coordinates are diagonal-basis
// throughout.
class Plane2 {
 public:
  Plane2(const Vector& v1, const Vector& v2);
  static Plane2 from_frame(const Matrix& frame);  // m x 2, full rank

  const Matrix& frame() const { return frame_; }
  int ambient_dim() const { return static_cast<int>(frame_.rows()); }
  Vector column(int j) const { return frame_.col(j); }

 private:
  explicit Plane2(Matrix frame) : frame_(std::move(frame)) {}
  Matrix frame_;
};

// Geodesic type of the plane, by the signature of the restricted form:
// (2,0,0) timelike AdS, (1,0,1) lightlike AdS, (0,0,2) Einstein photon.
enum class GeodesicClass { TimelikeAdS, LightlikeAdS, LightlikeEin, NotCausal };

const char* geodesic_class_name(GeodesicClass c);

GeodesicClass classify(const Plane2& P);

// Distance on the Grassmannian: the Hausdorff distance between the projective
// circles, which for the angle metric equals the largest principal angle
// (arccos of the smallest singular value of the frame overlap).
double delta_metric(const Plane2& P, const Plane2& Q);

// delta(P, F_q) where F_q is the pencil of planes through q: equals the
// point-to-line angle d(q, P(P)) = arccos ||F^T q||.
double fiber_distance(const Plane2& P, const ProjectivePoint& q);

Plane2 act_plane(const GroupElement& g, const Plane2& P);

// U-membership certificate at the sample's resolution: the geodesic clears
// every sampled limit point by more than `clearance`.
bool avoids_limit_set(const Plane2& P, const LimitSetSample& S, double clearance);
double min_fiber_distance(const Plane2& P, const LimitSetSample& S);

// Local expansion constant of g near the fiber of p, measured as the claim
// constant c with delta(P, F_q) >= c * delta(g.P, g.F_q) over sampled
// configurations (P, q) inside the radius-neighbourhood of F_p:
//   c_est = min over samples of  delta(P, F_q) / delta(g.P, g.F_q).
// c_est > 1 certifies that g contracts fiber distances there, equivalently
// that g^{-1} expands them on the image neighbourhood, which is the criterion
// constant associated with the attracting pole of g. Throws DegenerateSample
// when no sampled pair yields a usable ratio.
struct ExpansionProbeResult {
  double c_est = 0.0;
  Plane2 witness_plane;
  ProjectivePoint witness_point;
  std::size_t valid_samples = 0;
};

ExpansionProbeResult expansion_probe(const GroupElement& g, const ProjectivePoint& p,
                                     double radius, int trials, Rng& rng);

// Photon <-> unit tangent correspondence for Ein(1,N) photons (totally
// isotropic planes of R^{2,N+1}): the photon (x(t), t) with x a unit-speed
// great circle maps to (x(0), x'(0)).
Plane2 photon_from_tangent(const Vector& x, const Vector& v);
void photon_to_tangent(const Plane2& P, Vector& x, Vector& v);

// Trace of the geodesic of P inside an invisible domain. The projective
// circle of P is lifted to the universal Einstein space of the domain (copy 1
// of the AdS embedding), the time coordinate unwound over three winding
// periods centred on the domain's slab, and membership sampled. Runs split by
// gaps entirely inside the 2*mesh boundary band are merged.
struct DomainIntersection {
  bool hits = false;
  double t_enter = 0.0;  // universal-time interval of the longest run
  double t_exit = 0.0;
  int runs = 0;          // merged run count (1 expected for avoiding geodesics)
};

DomainIntersection intersect_domain(const Plane2& P, const InvisibleDomain& D,
                                    int samples = 2048);

}  // namespace einkit
