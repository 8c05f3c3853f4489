#include "einkit/causal_geodesics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace einkit {

namespace {

Matrix orthonormalize(const Matrix& frame) {
  Eigen::HouseholderQR<Matrix> qr(frame);
  Matrix Q = qr.householderQ() * Matrix::Identity(frame.rows(), 2);
  Matrix R = qr.matrixQR().topRows(2).triangularView<Eigen::Upper>();
  require(std::abs(R(0, 0)) > 1e-12 && std::abs(R(1, 1)) > 1e-12,
          ErrorCode::InvalidArgument, "plane frame is rank deficient");
  return Q;
}

void sign_fix_column(Matrix& F, int j) {
  int arg = 0;
  double best = 0.0;
  for (int i = 0; i < F.rows(); ++i) {
    const double a = std::abs(F(i, j));
    if (a > best + 1e-12) {
      best = a;
      arg = i;
    }
  }
  if (F(arg, j) < 0.0) F.col(j) = -F.col(j);
}

// Canonical representative: eigenbasis of the fixed weight form
// diag(1, 2, ..., m) restricted to the plane, eigenvalues ascending. The
// restricted operator depends only on the span, so any frame of the same
// plane canonicalizes to the same matrix. Nearly degenerate restrictions
// fall back to squared weights, then to the orthonormalized input.
Matrix canonical_frame(Matrix F) {
  F = orthonormalize(F);
  const int m = static_cast<int>(F.rows());
  for (int attempt = 0; attempt < 2; ++attempt) {
    Vector w(m);
    for (int i = 0; i < m; ++i) {
      const double base = 1.0 + static_cast<double>(i);
      w[i] = attempt == 0 ? base : base * base;
    }
    Eigen::Matrix2d M = F.transpose() * w.asDiagonal() * F;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(M);
    const double gap = es.eigenvalues()[1] - es.eigenvalues()[0];
    if (gap > 1e-10 * (1.0 + std::abs(es.eigenvalues()[1]))) {
      Matrix out = F * es.eigenvectors();
      sign_fix_column(out, 0);
      sign_fix_column(out, 1);
      return out;
    }
  }
  sign_fix_column(F, 0);
  sign_fix_column(F, 1);
  return F;
}

}  // namespace

Plane2::Plane2(const Vector& v1, const Vector& v2) {
  require(v1.size() == v2.size(), ErrorCode::DimensionMismatch,
          "plane: mixed dimensions");
  require(v1.size() >= 4, ErrorCode::InvalidArgument, "plane: ambient >= 4");
  Matrix F(v1.size(), 2);
  F.col(0) = v1;
  F.col(1) = v2;
  frame_ = canonical_frame(F);
}

Plane2 Plane2::from_frame(const Matrix& frame) {
  require(frame.cols() == 2 && frame.rows() >= 4, ErrorCode::InvalidArgument,
          "plane: frame must be m x 2 with m >= 4");
  return Plane2(canonical_frame(frame));
}

const char* geodesic_class_name(GeodesicClass c) {
  switch (c) {
    case GeodesicClass::TimelikeAdS: return "timelike_ads";
    case GeodesicClass::LightlikeAdS: return "lightlike_ads";
    case GeodesicClass::LightlikeEin: return "lightlike_ein";
    case GeodesicClass::NotCausal: return "not_causal";
  }
  return "unknown";
}

GeodesicClass classify(const Plane2& P) {
  const Signature sig = restricted_signature(
      {Vector(P.column(0)), Vector(P.column(1))}, Basis::Diagonal);
  if (sig == Signature{2, 0, 0}) return GeodesicClass::TimelikeAdS;
  if (sig == Signature{1, 0, 1}) return GeodesicClass::LightlikeAdS;
  if (sig == Signature{0, 0, 2}) return GeodesicClass::LightlikeEin;
  return GeodesicClass::NotCausal;
}

double delta_metric(const Plane2& P, const Plane2& Q) {
  require(P.ambient_dim() == Q.ambient_dim(), ErrorCode::DimensionMismatch,
          "delta_metric: dimension mismatch");
  Eigen::Matrix2d overlap = P.frame().transpose() * Q.frame();
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(overlap);
  return std::acos(clamp01(svd.singularValues()[1]));
}

double fiber_distance(const Plane2& P, const ProjectivePoint& q) {
  require(P.ambient_dim() == q.rep.size(), ErrorCode::DimensionMismatch,
          "fiber_distance: dimension mismatch");
  return std::acos(clamp01((P.frame().transpose() * q.rep).norm()));
}

Plane2 act_plane(const GroupElement& g, const Plane2& P) {
  require(g.ambient_dim() == P.ambient_dim(), ErrorCode::DimensionMismatch,
          "act_plane: dimension mismatch");
  return Plane2::from_frame(g.matrix * P.frame());
}

double min_fiber_distance(const Plane2& P, const LimitSetSample& S) {
  require(!S.points.empty(), ErrorCode::EmptySample, "min_fiber_distance: empty");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : S.points)
    best = std::min(best, fiber_distance(P, ProjectivePoint{p.point.rep}));
  return best;
}

bool avoids_limit_set(const Plane2& P, const LimitSetSample& S, double clearance) {
  require(classify(P) != GeodesicClass::NotCausal, ErrorCode::InvalidArgument,
          "avoids_limit_set: plane is not causal");
  return min_fiber_distance(P, S) > clearance;
}

ExpansionProbeResult expansion_probe(const GroupElement& g, const ProjectivePoint& p,
                                     double radius, int trials, Rng& rng) {
  require(g.basis == Basis::Diagonal, ErrorCode::BasisMismatch,
          "expansion_probe: diagonal-basis element expected");
  require(radius > 0.0 && trials > 0, ErrorCode::InvalidArgument,
          "expansion_probe: radius and trials must be positive");
  const int m = g.ambient_dim();
  require(p.rep.size() == m, ErrorCode::DimensionMismatch,
          "expansion_probe: dimension mismatch");

  ExpansionProbeResult out;
  out.c_est = std::numeric_limits<double>::infinity();
  out.witness_plane = Plane2(Vector::Unit(m, 0), Vector::Unit(m, 1));
  out.witness_point = p;

  for (int trial = 0; trial < trials; ++trial) {
    // q inside the ball of radius `radius` around p (so F_q is inside W_p)
    const double alpha = rng.uniform(0.0, 0.999 * radius);
    const Vector tau = rng.unit_tangent(p.rep);
    const Vector qv = std::cos(alpha) * p.rep + std::sin(alpha) * tau;
    const ProjectivePoint q = ProjectivePoint::from_vector(qv);

    // plane passing close to q: one direction tilted off q, one free
    const double beta = rng.uniform(1e-5, 0.1 * radius);
    const Vector tau2 = rng.unit_tangent(qv);
    const Vector y = std::cos(beta) * qv + std::sin(beta) * tau2;
    Vector z = rng.gaussian_vector(m);
    z -= z.dot(y) * y;
    if (z.norm() < 1e-8) continue;
    z.normalize();
    Plane2 P(y, z);
    if (fiber_distance(P, p) >= radius) continue;  // keep P inside W_p

    const double before = fiber_distance(P, q);
    if (before < 1e-12) continue;
    const Plane2 gP = act_plane(g, P);
    const ProjectivePoint gq = act_projective(g, q);
    const double after = fiber_distance(gP, gq);
    if (after < 1e-300) continue;
    const double ratio = before / after;
    ++out.valid_samples;
    if (ratio < out.c_est) {
      out.c_est = ratio;
      out.witness_plane = P;
      out.witness_point = q;
    }
  }
  require(out.valid_samples > 0, ErrorCode::DegenerateSample,
          "expansion_probe: no sampled pair produced a usable ratio");
  return out;
}

Plane2 photon_from_tangent(const Vector& x, const Vector& v) {
  require(x.size() == v.size(), ErrorCode::DimensionMismatch,
          "photon_from_tangent: dimension mismatch");
  require(std::abs(x.norm() - 1.0) <= 1e-9 && std::abs(v.norm() - 1.0) <= 1e-9 &&
              std::abs(x.dot(v)) <= 1e-9,
          ErrorCode::InvalidArgument,
          "photon_from_tangent: (x, v) must be a unit tangent pair");
  const int d = static_cast<int>(x.size());  // x on S^{d-1}, plane in R^{d+2}
  Vector w1(d + 2), w2(d + 2);
  w1[0] = 1.0;
  w1[1] = 0.0;
  w1.segment(2, d) = x;
  w2[0] = 0.0;
  w2[1] = 1.0;
  w2.segment(2, d) = v;
  return Plane2(w1 / std::sqrt(2.0), w2 / std::sqrt(2.0));
}

void photon_to_tangent(const Plane2& P, Vector& x, Vector& v) {
  const int m = P.ambient_dim();
  Matrix F = P.frame();
  // totally isotropic planes split into a round circle in the timelike plane
  // and a great circle in the spacelike block
  Eigen::Vector2d t1(F(0, 0), F(1, 0));
  Eigen::Vector2d t2(F(0, 1), F(1, 1));
  require(std::abs(t1.norm() - std::sqrt(0.5)) <= 1e-7 &&
              std::abs(t2.norm() - std::sqrt(0.5)) <= 1e-7 &&
              std::abs(t1.dot(t2)) <= 1e-7,
          ErrorCode::InvalidArgument,
          "photon_to_tangent: plane is not a photon of the Einstein space");
  // orient so that theta increases along the parametrization
  if (t1.x() * t2.y() - t1.y() * t2.x() < 0.0) {
    F.col(1) = -F.col(1);
    t2 = -t2;
  }
  const double phi = std::atan2(t1.y(), t1.x());  // theta(s) = phi + s
  const double s = -phi;
  const Vector x1 = F.col(0).segment(2, m - 2);
  const Vector x2 = F.col(1).segment(2, m - 2);
  x = std::sqrt(2.0) * (std::cos(s) * x1 + std::sin(s) * x2);
  v = std::sqrt(2.0) * (-std::sin(s) * x1 + std::cos(s) * x2);
  x /= x.norm();
  v -= v.dot(x) * x;
  v /= v.norm();
}

DomainIntersection intersect_domain(const Plane2& P, const InvisibleDomain& D,
                                    int samples) {
  require(samples >= 16, ErrorCode::InvalidArgument, "intersect_domain: samples >= 16");
  require(classify(P) != GeodesicClass::NotCausal, ErrorCode::InvalidArgument,
          "intersect_domain: plane is not causal");
  const int m = P.ambient_dim();
  require(m == D.n() + 2, ErrorCode::DimensionMismatch,
          "intersect_domain: plane ambient must match the domain boundary space");

  Matrix F = P.frame();
  // orient the loop so universal time increases with the parameter: the
  // timelike projection of the frame never degenerates on causal planes
  {
    const double det = F(0, 0) * F(1, 1) - F(1, 0) * F(0, 1);
    if (det < 0.0) F.col(1) = -F.col(1);
  }

  // Lift of the projective circle into the universal cover of Ein(1,n):
  // append sqrt(-q) as the hemisphere coordinate (copy 1 of the AdS
  // embedding), unwrap theta over three winding periods.
  const int total = 3 * samples;
  std::vector<double> ts(total);
  Matrix probes(D.n() + 1, total);
  double prev_theta = 0.0;
  double unwound = 0.0;
  for (int i = 0; i < total; ++i) {
    const double alpha = 6.0 * kPi * i / total;
    Vector w = std::cos(alpha) * F.col(0) + std::sin(alpha) * F.col(1);
    const double q = quad_form(w, Basis::Diagonal);
    Vector W(m + 1);
    W.head(m) = w;
    W[m] = std::sqrt(std::max(0.0, -q));
    W /= W.norm();
    const double r = std::hypot(W[0], W[1]);
    require(r > 1e-9, ErrorCode::NumericalFailure,
            "intersect_domain: degenerate timelike projection");
    const double theta = std::atan2(W[1], W[0]);
    if (i == 0) {
      unwound = theta;
    } else {
      double step = theta - prev_theta;
      while (step <= -kPi) step += 2.0 * kPi;
      while (step > kPi) step -= 2.0 * kPi;
      unwound += step;
    }
    prev_theta = theta;
    ts[i] = unwound;
    Vector xs = W.segment(2, m - 1) / r;
    probes.col(i) = xs / xs.norm();
  }

  // recentre the covered time window on the domain's slab
  {
    const auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
    const double mid = 0.5 * (*lo + *hi);
    const double shift = 2.0 * kPi * std::round((D.slab_center() - mid) / (2.0 * kPi));
    for (double& t : ts) t += shift;
  }

  Vector fplus, fminus;
  D.f_batch(probes, fplus, fminus);
  const double margin = D.mesh();
  const double band = 2.0 * D.mesh();
  std::vector<char> inside(total), in_band(total);
  for (int i = 0; i < total; ++i) {
    inside[i] = fminus[i] + margin < ts[i] && ts[i] < fplus[i] - margin;
    in_band[i] = std::min(std::abs(ts[i] - fplus[i]), std::abs(ts[i] - fminus[i])) <=
                 band;
  }

  // maximal runs of inside samples; gaps fully inside the boundary band merge
  struct Run {
    int begin, end;
  };
  std::vector<Run> runs;
  for (int i = 0; i < total; ++i) {
    if (!inside[i]) continue;
    if (!runs.empty() && runs.back().end + 1 == i)
      runs.back().end = i;
    else
      runs.push_back(Run{i, i});
  }
  if (runs.size() > 1) {
    std::vector<Run> merged;
    merged.push_back(runs.front());
    for (std::size_t r = 1; r < runs.size(); ++r) {
      bool gap_in_band = true;
      for (int i = merged.back().end + 1; i < runs[r].begin; ++i)
        gap_in_band = gap_in_band && in_band[i];
      if (gap_in_band)
        merged.back().end = runs[r].end;
      else
        merged.push_back(runs[r]);
    }
    runs.swap(merged);
  }

  DomainIntersection out;
  out.hits = !runs.empty();
  out.runs = static_cast<int>(runs.size());
  if (out.hits) {
    const auto longest = std::max_element(
        runs.begin(), runs.end(),
        [](const Run& a, const Run& b) { return a.end - a.begin < b.end - b.begin; });
    out.t_enter = ts[longest->begin];
    out.t_exit = ts[longest->end];
  }
  return out;
}

}  // namespace einkit
