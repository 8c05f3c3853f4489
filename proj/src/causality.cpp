#include "einkit/causality.hpp"

#include <algorithm>
#include <limits>

namespace einkit {

CausalRelation causal_classify(const UniversalPoint& p, const UniversalPoint& q,
                               double band) {
  require(p.x.size() == q.x.size(), ErrorCode::DimensionMismatch,
          "causal_classify: dimension mismatch");
  const double d0 = sphere_distance(p.x, q.x);
  const double dt = std::abs(p.t - q.t);
  if (std::abs(d0 - dt) <= band) return CausalRelation::LightlikeRelated;
  return d0 < dt ? CausalRelation::TimelikeRelated : CausalRelation::Unrelated;
}

double future_envelope(const CompactSample& K, const Vector& x) {
  require(!K.points.empty(), ErrorCode::EmptySample, "future_envelope: empty sample");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : K.points)
    best = std::min(best, p.t + sphere_distance(x, p.x));
  return best;
}

double past_envelope(const CompactSample& K, const Vector& x) {
  require(!K.points.empty(), ErrorCode::EmptySample, "past_envelope: empty sample");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : K.points)
    best = std::max(best, p.t - sphere_distance(x, p.x));
  return best;
}

bool in_future_of(const CompactSample& K, const UniversalPoint& p,
                  TimeOrientation orientation) {
  if (orientation == TimeOrientation::Future) return p.t >= future_envelope(K, p.x);
  return p.t <= past_envelope(K, p.x);
}

bool certify_acausal(const std::vector<UniversalPoint>& points, AcausalityMode mode,
                     double band) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const CausalRelation rel = causal_classify(points[i], points[j], band);
      if (rel == CausalRelation::TimelikeRelated) return false;
      if (rel == CausalRelation::LightlikeRelated && mode == AcausalityMode::Acausal)
        return false;
    }
  }
  return true;
}

AchronalGraph make_achronal_graph(std::vector<Vector> domain_points,
                                  std::vector<double> values, ContractionKind kind) {
  require(domain_points.size() == values.size(), ErrorCode::InvalidArgument,
          "achronal graph: point/value count mismatch");
  const std::size_t n = domain_points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d0 = sphere_distance(domain_points[i], domain_points[j]);
      const double df = std::abs(values[i] - values[j]);
      const bool ok = kind == ContractionKind::Lipschitz1 ? df <= d0 + 1e-9
                                                          : df < d0 + 1e-9;
      require(ok, ErrorCode::InvalidArgument,
              "achronal graph: contraction inequality violated");
    }
  }
  return AchronalGraph{std::move(domain_points), std::move(values), kind};
}

AffineDomainU bounding_affine_domain(const std::vector<UniversalPoint>& points) {
  require(!points.empty(), ErrorCode::EmptySample, "bounding_affine_domain: empty");
  require(certify_acausal(points, AcausalityMode::Acausal), ErrorCode::NotAcausal,
          "bounding_affine_domain: set is not acausal");
  double m = points.front().t, M = points.front().t;
  for (const auto& p : points) {
    m = std::min(m, p.t);
    M = std::max(M, p.t);
  }
  require(M - m < kPi, ErrorCode::NotAcausal,
          "bounding_affine_domain: time spread >= pi");
  return AffineDomainU{0.5 * (m + M) - 0.5 * kPi};
}

}  // namespace einkit
