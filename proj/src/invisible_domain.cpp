#include "einkit/invisible_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace einkit {

const char* region_label_name(RegionLabel label) {
  switch (label) {
    case RegionLabel::FutureCore: return "future_core";
    case RegionLabel::PastCore: return "past_core";
    case RegionLabel::PastOfBoundary: return "past_of_boundary";
    case RegionLabel::FutureOfBoundary: return "future_of_boundary";
    case RegionLabel::ConformalBoundary: return "conformal_boundary";
    case RegionLabel::FutureHorizon: return "future_horizon";
    case RegionLabel::PastHorizon: return "past_horizon";
    case RegionLabel::OutsideOmega: return "outside_omega";
  }
  return "unknown";
}

namespace {

Vector embed_equator(const Vector& x) {
  Vector e(x.size() + 1);
  e.head(x.size()) = x;
  e[x.size()] = 0.0;
  return e;
}

}  // namespace

InvisibleDomain::InvisibleDomain(const std::vector<UniversalPoint>& points,
                                 const Options& options)
    : options_(options) {
  require(!points.empty(), ErrorCode::EmptySample, "invisible domain: empty sample");
  require(options.mesh > 0.0, ErrorCode::InvalidArgument, "invisible domain: mesh > 0");
  n_ = static_cast<int>(points.front().x.size());
  require(n_ >= 2, ErrorCode::InvalidArgument, "invisible domain: n >= 2");
  require(certify_acausal(points, options.required_mode), ErrorCode::NotAcausal,
          "invisible domain: sample fails the required acausality mode");

  const int count = static_cast<int>(points.size());
  sample_x_.resize(count, n_ + 1);
  sample_t_.resize(count);
  sample_klein_.resize(count, n_ + 3);
  sample_embedded_.reserve(count);
  double tmin = points.front().t, tmax = points.front().t;
  for (int i = 0; i < count; ++i) {
    require(points[i].x.size() == n_, ErrorCode::DimensionMismatch,
            "invisible domain: mixed dimensions");
    const Vector xe = embed_equator(points[i].x);
    sample_embedded_.push_back(UniversalPoint{xe, points[i].t});
    sample_x_.row(i) = xe.transpose();
    sample_t_[i] = points[i].t;
    Vector k(n_ + 3);
    k[0] = std::cos(points[i].t);
    k[1] = std::sin(points[i].t);
    k.segment(2, n_ + 1) = xe;
    sample_klein_.row(i) = (k / std::sqrt(2.0)).transpose();
    tmin = std::min(tmin, points[i].t);
    tmax = std::max(tmax, points[i].t);
  }
  slab_center_ = 0.5 * (tmin + tmax);

  // Lambda^{+-} \ Lambda extraction over an equator grid. A graph point
  // belongs to the sample when it is within 2*mesh of it in the product
  // metric max(d_0, |dt|).
  int grid_count = options.boundary_grid;
  if (grid_count <= 0) {
    if (n_ - 1 == 1) {
      grid_count = std::clamp(static_cast<int>(std::ceil(2.0 * kPi / options.mesh)),
                              64, 8192);
    } else {
      grid_count = std::clamp(
          static_cast<int>(std::ceil(4.0 * kPi / (options.mesh * options.mesh))), 256,
          16384);
    }
  }
  const auto grid = sphere_grid(n_ - 1, grid_count, options.grid_seed);
  for (const auto& gx : grid) {
    const Vector xe = embed_equator(gx);
    const double gp = f_plus(xe);
    const double gm = f_minus(xe);
    double dist_plus = std::numeric_limits<double>::infinity();
    double dist_minus = std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
      const double d0 = sphere_distance(xe, sample_embedded_[i].x);
      dist_plus = std::min(dist_plus, std::max(d0, std::abs(gp - sample_t_[i])));
      dist_minus = std::min(dist_minus, std::max(d0, std::abs(gm - sample_t_[i])));
    }
    if (dist_plus > 2.0 * options.mesh)
      boundary_plus_.push_back(UniversalPoint{xe, gp});
    if (dist_minus > 2.0 * options.mesh)
      boundary_minus_.push_back(UniversalPoint{xe, gm});
  }

  // nonemptiness: the envelopes must leave room between them away from the
  // sample footprint
  const auto probes = sphere_grid(n_, 256, options.grid_seed + 1);
  bool some_room = false;
  for (const auto& p : probes) {
    if (f_minus(p) < f_plus(p) - 1e-12) {
      some_room = true;
      break;
    }
  }
  require(some_room, ErrorCode::NotAcausal,
          "invisible domain: envelopes leave no interior");
}

InvisibleDomain InvisibleDomain::from_limit_set(const LimitSetSample& lifted,
                                                const Options& options) {
  require(lifted.lift.has_value(), ErrorCode::InvalidArgument,
          "invisible domain: limit set sample has no universal lift");
  return InvisibleDomain(*lifted.lift, options);
}

double InvisibleDomain::f_plus(const Vector& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sample_embedded_.size(); ++i)
    best = std::min(best, sample_t_[static_cast<int>(i)] +
                              sphere_distance(x, sample_embedded_[i].x));
  return best;
}

double InvisibleDomain::f_minus(const Vector& x) const {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sample_embedded_.size(); ++i)
    best = std::max(best, sample_t_[static_cast<int>(i)] -
                              sphere_distance(x, sample_embedded_[i].x));
  return best;
}

void InvisibleDomain::f_batch(const Matrix& probes, Vector& fplus, Vector& fminus) const {
  const int m = static_cast<int>(probes.cols());
  const int count = static_cast<int>(sample_t_.size());
  fplus.resize(m);
  fminus.resize(m);
  // one GEMM for all probe/sample pairs, then column reductions
  Matrix dots = sample_x_ * probes;  // count x m
  for (int j = 0; j < m; ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
      const double d0 = std::acos(std::max(-1.0, std::min(1.0, dots(i, j))));
      lo = std::min(lo, sample_t_[i] + d0);
      hi = std::max(hi, sample_t_[i] - d0);
    }
    fplus[j] = lo;
    fminus[j] = hi;
  }
}

bool InvisibleDomain::dual_cone_contains(const UniversalPoint& p) const {
  Vector k(n_ + 3);
  k[0] = std::cos(p.t);
  k[1] = std::sin(p.t);
  k.segment(2, n_ + 1) = p.x;
  k /= std::sqrt(2.0);
  const Matrix J = gram_matrix(n_ + 1, Basis::Diagonal);
  const Vector jk = J * k;
  for (int i = 0; i < sample_klein_.rows(); ++i)
    if (sample_klein_.row(i).dot(jk) >= 0.0) return false;
  return true;
}

bool InvisibleDomain::contains(const UniversalPoint& p, bool cross_check) const {
  return contains(p, options_.mesh, cross_check);
}

bool InvisibleDomain::contains(const UniversalPoint& p, double margin,
                               bool cross_check) const {
  require(p.x.size() == n_ + 1, ErrorCode::DimensionMismatch,
          "contains: probe must lie on S^n");
  const double fp = f_plus(p.x);
  const double fm = f_minus(p.x);
  const bool inside = fm + margin < p.t && p.t < fp - margin;
  if (cross_check && std::abs(p.t - slab_center_) < 0.5 * kPi) {
    const bool raw = fm < p.t && p.t < fp;
    const bool dual = dual_cone_contains(p);
    if (raw != dual) {
      const double boundary_dist = std::min(std::abs(p.t - fp), std::abs(p.t - fm));
      if (boundary_dist > 2.0 * options_.mesh)
        fail(ErrorCode::OracleDisagreement,
             "contains: envelope and dual-cone tests disagree at distance " +
                 std::to_string(boundary_dist) + " from the boundary");
    }
  }
  return inside;
}

InvisibleDomain::Component InvisibleDomain::component_of(const UniversalPoint& p) const {
  require(contains(p), ErrorCode::NotContained,
          "component_of: point is not in the domain");
  const double h = p.x[n_];
  if (h > 1e-9) return Component::E1;
  if (h < -1e-9) return Component::E2;
  return Component::BoundaryEin;
}

AchronalGraph InvisibleDomain::lambda_pm_graph(bool plus,
                                               const std::vector<Vector>& grid) const {
  require(!grid.empty(), ErrorCode::InvalidArgument, "lambda_pm_graph: empty grid");
  std::vector<Vector> domain;
  std::vector<double> values;
  domain.reserve(grid.size());
  values.reserve(grid.size());
  for (const auto& gx : grid) {
    require(gx.size() == n_, ErrorCode::DimensionMismatch,
            "lambda_pm_graph: grid must lie on the equator sphere");
    const Vector xe = embed_equator(gx);
    domain.push_back(gx);
    values.push_back(plus ? f_plus(xe) : f_minus(xe));
  }
  return make_achronal_graph(std::move(domain), std::move(values),
                             ContractionKind::Lipschitz1);
}

double InvisibleDomain::future_horizon_height(const Vector& x) const {
  require(!boundary_plus_.empty(), ErrorCode::EmptyBoundary,
          "future_horizon_height: boundary graph is empty");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& q : boundary_plus_)
    best = std::max(best, q.t - sphere_distance(x, q.x));
  return best;
}

RegionClassification InvisibleDomain::classify_region(const UniversalPoint& p,
                                                      double horizon_band) const {
  const double band = horizon_band > 0.0 ? horizon_band : 2.0 * options_.mesh;
  RegionClassification out;
  if (!contains(p)) {
    out.future_side = RegionLabel::OutsideOmega;
    out.past_side = RegionLabel::OutsideOmega;
    return out;
  }
  if (component_of(p) == Component::BoundaryEin) {
    out.future_side = RegionLabel::ConformalBoundary;
    out.past_side = RegionLabel::ConformalBoundary;
    return out;
  }
  if (boundary_plus_.empty() || boundary_minus_.empty())
    fail(ErrorCode::EmptyBoundary,
         "classify_region: limit set is a full sampled sphere; only core labels "
         "apply");

  // future side: in the past of some boundary-plus point or not
  {
    double v = -std::numeric_limits<double>::infinity();
    for (const auto& q : boundary_plus_)
      v = std::max(v, q.t - sphere_distance(p.x, q.x));
    v -= p.t;
    if (v > band)
      out.future_side = RegionLabel::PastOfBoundary;
    else if (v < -band)
      out.future_side = RegionLabel::FutureCore;
    else
      out.future_side = RegionLabel::FutureHorizon;
  }
  // past side, dual construction
  {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& q : boundary_minus_)
      v = std::min(v, q.t + sphere_distance(p.x, q.x));
    v = p.t - v;
    if (v > band)
      out.past_side = RegionLabel::FutureOfBoundary;
    else if (v < -band)
      out.past_side = RegionLabel::PastCore;
    else
      out.past_side = RegionLabel::PastHorizon;
  }
  return out;
}

UniversalPoint InvisibleDomain::lift_to_slab(const KleinPoint& p) const {
  require(p.tag == SpaceTag::Ein && p.ambient_dim() == n_ + 3,
          ErrorCode::InvalidArgument, "lift_to_slab: expects an Ein(1,n) point");
  const ConformalPoint c = klein_to_conformal(p);
  const double k = std::round((slab_center_ - c.theta) / (2.0 * kPi));
  return UniversalPoint{c.x, c.theta + 2.0 * kPi * k};
}

}  // namespace einkit
