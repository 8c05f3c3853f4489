#pragma once

#include "einkit/group.hpp"

namespace einkit {

// Model spaces handled here, by the dimension d of the conformal sphere:
//
//   Ein(d)  = Einstein space Ein_{1,d}: null classes in S(R^{2,d+1}),
//             conformal model S^d x S^1, universal model S^d x R.
//             Ambient vectors have size d+3.
//   AdS(d)  = anti-de Sitter space AdS_{1,d}: quadric q = -1 in R^{2,d},
//             ambient size d+2, conformal boundary Ein(d-1).
//
// Klein representatives are stored sign-sensitively: a point of Ein(d) is a
// class of the cone under positive rescaling only, which is exactly the
// double-cover data over the projective model. Antipodal identification is
// opt-in through `identify_antipodes` arguments.
enum class SpaceTag { Ein, AdS };

struct KleinPoint {
  Vector rep;          // diagonal-basis coordinates
  SpaceTag tag = SpaceTag::Ein;

  int ambient_dim() const { return static_cast<int>(rep.size()); }
  // conformal sphere dimension
  int sphere_dim() const {
    return tag == SpaceTag::Ein ? ambient_dim() - 3 : ambient_dim() - 2;
  }
};

// Unit-norm validated constructors. Ein reps are Euclidean-unit null vectors;
// AdS reps are scaled to q = -1.
KleinPoint make_ein_klein(const Vector& rep, double tolerance = 1e-9);
KleinPoint make_ads_klein(const Vector& rep, double tolerance = 1e-9);

struct ConformalPoint {
  Vector x;        // unit vector in R^{d+1}
  double theta;    // angle in [0, 2*pi)
};

struct UniversalPoint {
  Vector x;        // unit vector in R^{d+1}
  double t;        // universal time, radians, unbounded
};

ConformalPoint make_conformal(const Vector& x, double theta);
UniversalPoint make_universal(const Vector& x, double t);

// Ein(d) conversions. Klein <-> conformal is (x, theta) <-> class of
// (cos theta, sin theta, x) (null since ||x|| = 1); universal -> conformal
// reduces t mod 2*pi; the reverse branch k gives t = theta + 2*pi*k.
ConformalPoint klein_to_conformal(const KleinPoint& p);
KleinPoint conformal_to_klein(const ConformalPoint& p);
ConformalPoint universal_to_conformal(const UniversalPoint& p);
UniversalPoint conformal_to_universal(const ConformalPoint& p, long branch);
KleinPoint universal_to_klein(const UniversalPoint& p);
UniversalPoint klein_to_universal(const KleinPoint& p, long branch);

// sigma^k(x, t) = ((-1)^k x, t + k*pi). sigma generates the deck group of the
// projective model; delta = sigma^2 the deck group of Ein.
UniversalPoint sigma(const UniversalPoint& p, long k = 1);

// Ramified degree-2 covering Ein(1,n) -> closure of AdS(1,n): drop the last
// coordinate. Sheet is the sign of the dropped coordinate; Boundary when it
// vanishes (image then lies in Ein(1,n-1)).
enum class Sheet { Plus, Minus, Boundary };

struct CoverProjection {
  KleinPoint image;
  Sheet sheet = Sheet::Boundary;
};

CoverProjection ads_cover_project(const KleinPoint& p, double tolerance = 1e-9);

// Inverse lift of an AdS Klein point onto the chosen sheet of Ein(1,n).
KleinPoint ads_cover_lift(const KleinPoint& ads_point, Sheet sheet);

// Conformal embedding AdS(1,n) = H^n x S^1 -> Ein(1,n) = S^n x S^1: x must be
// an interior point of the chosen hemisphere (last coordinate nonzero).
ConformalPoint ads_conformal_embed(const Vector& hemisphere_point, double theta,
                                   double tolerance = 1e-9);

}  // namespace einkit
