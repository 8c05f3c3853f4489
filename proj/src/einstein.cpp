#include "einkit/einstein.hpp"

#include <cmath>

namespace einkit {

namespace {

double wrap_angle(double t) {
  double w = std::fmod(t, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

}  // namespace

KleinPoint make_ein_klein(const Vector& rep, double tolerance) {
  require(rep.size() >= 4, ErrorCode::InvalidArgument, "ein point: ambient >= 4");
  const double norm = rep.norm();
  require(norm > 1e-300, ErrorCode::InvalidArgument, "ein point: zero vector");
  Vector unit = rep / norm;
  const double q = quad_form(unit, Basis::Diagonal);
  require(std::abs(q) <= tolerance, ErrorCode::InvalidArgument,
          "ein point: representative is not null, q = " + std::to_string(q));
  return KleinPoint{unit, SpaceTag::Ein};
}

KleinPoint make_ads_klein(const Vector& rep, double tolerance) {
  require(rep.size() >= 4, ErrorCode::InvalidArgument, "ads point: ambient >= 4");
  const double q = quad_form(rep, Basis::Diagonal);
  require(q < 0.0, ErrorCode::InvalidArgument, "ads point: representative has q >= 0");
  Vector scaled = rep / std::sqrt(-q);
  (void)tolerance;
  return KleinPoint{scaled, SpaceTag::AdS};
}

ConformalPoint make_conformal(const Vector& x, double theta) {
  require(std::abs(x.norm() - 1.0) <= 1e-12, ErrorCode::InvalidArgument,
          "conformal point: x must be a unit vector");
  return ConformalPoint{x, wrap_angle(theta)};
}

UniversalPoint make_universal(const Vector& x, double t) {
  require(std::abs(x.norm() - 1.0) <= 1e-12, ErrorCode::InvalidArgument,
          "universal point: x must be a unit vector");
  return UniversalPoint{x, t};
}

ConformalPoint klein_to_conformal(const KleinPoint& p) {
  require(p.tag == SpaceTag::Ein, ErrorCode::InvalidArgument,
          "klein_to_conformal expects an Ein point");
  const int m = p.ambient_dim();
  const double r = std::hypot(p.rep[0], p.rep[1]);
  require(r > 1e-12, ErrorCode::NumericalFailure,
          "klein_to_conformal: degenerate timelike part");
  Vector x = p.rep.segment(2, m - 2) / r;
  // null rep: |x| = r after scaling, renormalize against rounding
  x /= x.norm();
  const double theta = wrap_angle(std::atan2(p.rep[1], p.rep[0]));
  return ConformalPoint{x, theta};
}

KleinPoint conformal_to_klein(const ConformalPoint& p) {
  const int d = static_cast<int>(p.x.size()) - 1;
  Vector rep(d + 3);
  rep[0] = std::cos(p.theta);
  rep[1] = std::sin(p.theta);
  rep.segment(2, d + 1) = p.x;
  return make_ein_klein(rep / std::sqrt(2.0), 1e-9);
}

ConformalPoint universal_to_conformal(const UniversalPoint& p) {
  return ConformalPoint{p.x, wrap_angle(p.t)};
}

UniversalPoint conformal_to_universal(const ConformalPoint& p, long branch) {
  return UniversalPoint{p.x, p.theta + 2.0 * kPi * static_cast<double>(branch)};
}

KleinPoint universal_to_klein(const UniversalPoint& p) {
  return conformal_to_klein(universal_to_conformal(p));
}

UniversalPoint klein_to_universal(const KleinPoint& p, long branch) {
  return conformal_to_universal(klein_to_conformal(p), branch);
}

UniversalPoint sigma(const UniversalPoint& p, long k) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return UniversalPoint{sign * p.x, p.t + static_cast<double>(k) * kPi};
}

CoverProjection ads_cover_project(const KleinPoint& p, double tolerance) {
  require(p.tag == SpaceTag::Ein, ErrorCode::InvalidArgument,
          "ads_cover_project expects an Ein point");
  const int m = p.ambient_dim();
  const double last = p.rep[m - 1];
  Vector head = p.rep.head(m - 1);
  if (std::abs(last) <= tolerance) {
    return CoverProjection{make_ein_klein(head, 1e-6), Sheet::Boundary};
  }
  // q(head) = -last^2 < 0 since the full rep is null
  CoverProjection out;
  out.image = make_ads_klein(head);
  out.sheet = last > 0.0 ? Sheet::Plus : Sheet::Minus;
  return out;
}

KleinPoint ads_cover_lift(const KleinPoint& ads_point, Sheet sheet) {
  require(ads_point.tag == SpaceTag::AdS, ErrorCode::InvalidArgument,
          "ads_cover_lift expects an AdS point");
  require(sheet != Sheet::Boundary, ErrorCode::InvalidArgument,
          "ads_cover_lift: boundary is not a sheet");
  const int m = ads_point.ambient_dim();
  Vector rep(m + 1);
  rep.head(m) = ads_point.rep;  // q = -1
  rep[m] = sheet == Sheet::Plus ? 1.0 : -1.0;
  return make_ein_klein(rep, 1e-9);
}

ConformalPoint ads_conformal_embed(const Vector& hemisphere_point, double theta,
                                   double tolerance) {
  require(std::abs(hemisphere_point.norm() - 1.0) <= 1e-9, ErrorCode::InvalidArgument,
          "ads_conformal_embed: point must be unit");
  const int d = static_cast<int>(hemisphere_point.size()) - 1;
  require(d >= 2, ErrorCode::InvalidArgument, "ads_conformal_embed: sphere dim >= 2");
  const double last = hemisphere_point[d];
  require(std::abs(last) > tolerance, ErrorCode::InvalidArgument,
          "ads_conformal_embed: point lies on the boundary equator");
  return make_conformal(hemisphere_point, theta);
}

}  // namespace einkit
