#pragma once

#include "einkit/einstein.hpp"

namespace einkit {

// Causal relations in the universal Einstein space S^d x R: two points are
// timelike related iff d_0(x,x') < |t - t'|, lightlike on the band
// |d_0 - |dt|| <= kLightlikeBand, unrelated iff d_0 > |dt|. For |dt| <= pi
// this matches the sign of the inner product of Klein lifts,
//   <lift(x,t), lift(x',t')> = (cos d_0(x,x') - cos(t - t')) / 2.
enum class CausalRelation { TimelikeRelated, LightlikeRelated, Unrelated };

constexpr double kLightlikeBand = 1e-7;

CausalRelation causal_classify(const UniversalPoint& p, const UniversalPoint& q,
                               double band = kLightlikeBand);

// Finite sample of a compact set with a declared sampling density (radians).
// Future/past answers carry a +-mesh error bar: the envelopes below are
// 1-Lipschitz in the sample points.
struct CompactSample {
  std::vector<UniversalPoint> points;
  double mesh = 0.0;
};

enum class TimeOrientation { Future, Past };

// Envelope of J^+(K): f(x) = min over samples of (t_0 + d_0(x, x_0)); the
// past uses g(x) = max of (t_0 - d_0(x, x_0)).
double future_envelope(const CompactSample& K, const Vector& x);
double past_envelope(const CompactSample& K, const Vector& x);

bool in_future_of(const CompactSample& K, const UniversalPoint& p,
                  TimeOrientation orientation);

enum class AcausalityMode { Acausal, Achronal };

// True when every distinct pair is unrelated (Acausal: strictly, pairs inside
// the lightlike band fail; Achronal: lightlike pairs allowed).
bool certify_acausal(const std::vector<UniversalPoint>& points, AcausalityMode mode,
                     double band = kLightlikeBand);

// Graph of a 1-Lipschitz (or strictly 1-contracting) function over a subset
// of a round sphere.
enum class ContractionKind { Lipschitz1, Strict };

struct AchronalGraph {
  std::vector<Vector> domain_points;
  std::vector<double> values;
  ContractionKind contraction = ContractionKind::Lipschitz1;
};

// Validates the pairwise Lipschitz/contraction inequalities (1e-9 slack).
AchronalGraph make_achronal_graph(std::vector<Vector> domain_points,
                                  std::vector<double> values, ContractionKind kind);

// Width-pi slab S^d x (t0, t0+pi) of the universal space.
struct AffineDomainU {
  double t0 = 0.0;
  double t1() const { return t0 + kPi; }
  bool contains_time(double t) const { return t > t0 && t < t0 + kPi; }
};

// Centered slab containing an acausal set (its time spread is < pi).
// Throws NotAcausal when the precondition fails.
AffineDomainU bounding_affine_domain(const std::vector<UniversalPoint>& points);

}  // namespace einkit
