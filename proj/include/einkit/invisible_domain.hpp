#pragma once

#include "einkit/limit_set.hpp"

namespace einkit {

// Region labels of the future-side decomposition of a regular domain
// (core / past of the conformal boundary / horizon band), the dual past-side
// labels, and the two labels every point gets before those apply.
enum class RegionLabel {
  FutureCore,
  PastCore,
  PastOfBoundary,
  FutureOfBoundary,
  ConformalBoundary,
  FutureHorizon,
  PastHorizon,
  OutsideOmega,
};

const char* region_label_name(RegionLabel label);

struct RegionClassification {
  RegionLabel future_side = RegionLabel::OutsideOmega;
  RegionLabel past_side = RegionLabel::OutsideOmega;
};

// The invisible domain of a lifted acausal (or achronal) sample
// { (x_i, t_i) } with x_i on the equator S^{n-1} of S^n. Everything is
// evaluated from the two 1-Lipschitz envelopes
//   f+(x) = min_i ( t_i + d_0(x, x_i) ),   f-(x) = max_i ( t_i - d_0(x, x_i) ),
// with sampling error bounded by the declared mesh. Membership uses a
// strictness margin of one mesh, so declared-inside points are inside the
// true domain.
class InvisibleDomain {
 public:
  struct Options {
    double mesh = 1e-3;
    AcausalityMode required_mode = AcausalityMode::Acausal;
    int boundary_grid = 0;        // 0 = derive from mesh
    std::uint64_t grid_seed = 2026;
  };

  // points: (x in S^{n-1} subset R^n, t). Validates the mode, embeds the
  // equator into S^n (hemisphere axis = last coordinate axis) and extracts
  // the boundary graph samples.
  InvisibleDomain(const std::vector<UniversalPoint>& points, const Options& options);

  static InvisibleDomain from_limit_set(const LimitSetSample& lifted,
                                        const Options& options);

  int n() const { return n_; }
  double mesh() const { return options_.mesh; }
  int ambient_sphere_dim() const { return n_; }  // domain lives over S^n
  double slab_center() const { return slab_center_; }

  // f+/f- at a point of S^n (dimension n+1); batched variant evaluates one
  // column per probe.
  double f_plus(const Vector& x) const;
  double f_minus(const Vector& x) const;
  void f_batch(const Matrix& probes, Vector& fplus, Vector& fminus) const;

  // f- + margin < t < f+ - margin. cross_check compares the raw envelope
  // test with the Klein dual-cone test (all inner products with the lifted
  // sample negative) and throws OracleDisagreement when they differ at a
  // point farther than 2*mesh from the boundary; the comparison is only
  // meaningful inside the affine slab of the domain.
  bool contains(const UniversalPoint& p, bool cross_check = false) const;
  bool contains(const UniversalPoint& p, double margin, bool cross_check) const;

  // Klein dual-cone membership test on its own (Lemma-style oracle).
  bool dual_cone_contains(const UniversalPoint& p) const;

  enum class Component { E1, E2, BoundaryEin };
  // Requires contains(p); sign of the hemisphere coordinate.
  Component component_of(const UniversalPoint& p) const;

  // Restriction g+/g- of the envelopes to an equator grid (vectors in R^n).
  AchronalGraph lambda_pm_graph(bool plus, const std::vector<Vector>& grid) const;

  // Future-side and past-side region labels; horizon_band <= 0 uses 2*mesh.
  // Throws EmptyBoundary when the boundary graph carries no points outside
  // the sample (the limit set is a full sampled sphere).
  RegionClassification classify_region(const UniversalPoint& p,
                                       double horizon_band = -1.0) const;

  // Boundary graph samples extracted at build time: points of the Lambda^+/-
  // graphs at distance > 2*mesh from the sample (product metric).
  const std::vector<UniversalPoint>& boundary_plus() const { return boundary_plus_; }
  const std::vector<UniversalPoint>& boundary_minus() const { return boundary_minus_; }

  // Candidate horizon height over x: the past envelope of Lambda^+ \ Lambda.
  double future_horizon_height(const Vector& x) const;

  // Universal representative of an Ein(1,n) Klein point on the branch inside
  // the domain's affine slab.
  UniversalPoint lift_to_slab(const KleinPoint& p) const;

  const std::vector<UniversalPoint>& sample() const { return sample_embedded_; }

 private:
  int n_ = 0;
  Options options_;
  std::vector<UniversalPoint> sample_embedded_;  // x embedded in R^{n+1}
  Matrix sample_x_;                              // rows = embedded sample points
  Vector sample_t_;
  Matrix sample_klein_;                          // rows = Klein lifts (n+3)
  double slab_center_ = 0.0;
  std::vector<UniversalPoint> boundary_plus_;
  std::vector<UniversalPoint> boundary_minus_;
};

}  // namespace einkit
