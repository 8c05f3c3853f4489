#include "einkit/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace einkit {

namespace {

Vector embed_equator(const Vector& x) {
  Vector e(x.size() + 1);
  e.head(x.size()) = x;
  e[x.size()] = 0.0;
  return e;
}

// Klein lift of a universal boundary point (x in S^{n-1}, t), ambient n+2.
Vector boundary_klein(const Vector& x, double t) {
  Vector k(x.size() + 2);
  k[0] = std::cos(t);
  k[1] = std::sin(t);
  k.segment(2, x.size()) = x;
  return k / std::sqrt(2.0);
}

LimitSetSample analytic_sample(int n, const std::vector<Vector>& equator_points,
                               double t) {
  LimitSetSample S;
  S.n = n;
  S.dedupe_radius = 0.0;
  std::vector<UniversalPoint> lift;
  for (const auto& x : equator_points) {
    S.points.push_back(
        LimitPoint{make_ein_klein(boundary_klein(x, t), 1e-9), "", 0.0});
    lift.push_back(UniversalPoint{x, t});
  }
  S.lift = std::move(lift);
  return S;
}

}  // namespace

Fixture build_cyclic(const CyclicParams& params) {
  require(params.lambda > params.mu && params.mu >= 0.0, ErrorCode::InvalidArgument,
          "cyclic fixture: needs lambda > mu >= 0");
  Fixture f;
  f.kind = FixtureKind::CyclicProximal;
  f.name = "cyclic";
  f.n = params.n;
  f.presentation = make_presentation({weyl_element(params.n, params.lambda, params.mu)});
  LimitSetOptions opt;
  opt.max_len = params.max_len;
  // pole gap of a(lambda,mu)^k grows like k (lambda - mu); keep the filter
  // below the largest enumerated power
  opt.gap_min = std::max(1.0, (params.lambda - params.mu) * (params.max_len - 1));
  opt.dedupe_radius = 1e-6;
  f.sample = lift_acausal(approximate_limit_set(*f.presentation, opt));
  f.mesh = 1e-6;
  f.params = {{"n", params.n},
              {"lambda", params.lambda},
              {"mu", params.mu},
              {"max_len", params.max_len}};
  return f;
}

namespace {

Matrix so12_boost(double length) {
  // boost in the (v, x1) plane of the (v, x1, x2) factor, u fixed
  Matrix B = Matrix::Identity(4, 4);
  B(1, 1) = std::cosh(length);
  B(1, 2) = std::sinh(length);
  B(2, 1) = std::sinh(length);
  B(2, 2) = std::cosh(length);
  return B;
}

Matrix circle_rotation(double phi) {
  Matrix R = Matrix::Identity(4, 4);
  R(2, 2) = std::cos(phi);
  R(2, 3) = -std::sin(phi);
  R(3, 2) = std::sin(phi);
  R(3, 3) = std::cos(phi);
  return R;
}

// Action of an O(1,2)-block element on the boundary circle of H^2: the null
// direction (v=1, cos phi, sin phi) maps to another future null direction.
double circle_action(const Matrix& g, double phi) {
  Vector w(4);
  w << 0.0, 1.0, std::cos(phi), std::sin(phi);
  Vector image = g * w;
  require(image[1] > 1e-12, ErrorCode::NumericalFailure,
          "circle_action: time orientation lost");
  return std::atan2(image[3] / image[1], image[2] / image[1]);
}

double angle_gap(double a, double b) {
  double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  if (d > kPi) d = 2.0 * kPi - d;
  return d;
}

void check_ping_pong(const GroupPresentation& G, double disk_radius) {
  // letters a, A, b, B with attracting angles 0, pi, pi/2, 3pi/2
  const double attract[4] = {0.0, kPi, 0.5 * kPi, 1.5 * kPi};
  const int inverse_of[4] = {1, 0, 3, 2};
  const GroupElement* letters[4] = {&G.generators[0], &G.inverses[0],
                                    &G.generators[1], &G.inverses[1]};
  const int samples = 2048;
  for (int s = 0; s < 4; ++s) {
    for (int i = 0; i < samples; ++i) {
      const double phi = 2.0 * kPi * i / samples;
      if (angle_gap(phi, attract[inverse_of[s]]) <= disk_radius) continue;
      const double image = circle_action(letters[s]->matrix, phi);
      if (angle_gap(image, attract[s]) > disk_radius)
        fail(ErrorCode::PingPongFailure,
             "schottky fixture: ping-pong disks overlap (letter " +
                 std::to_string(s) + ")");
    }
  }
}

}  // namespace

Fixture build_schottky(const SchottkyParams& params) {
  require(params.separation > 0.0, ErrorCode::InvalidArgument,
          "schottky fixture: separation > 0");
  const double length = 2.0 * params.separation;
  Fixture f;
  f.kind = FixtureKind::SchottkyO12inO22;
  f.name = "schottky";
  f.n = 2;

  const Matrix A = so12_boost(length);
  const Matrix R = circle_rotation(0.5 * kPi);
  const Matrix B = R * A * R.transpose();
  f.presentation = make_presentation(
      {validate(A, Basis::Diagonal), validate(B, Basis::Diagonal)});
  check_ping_pong(*f.presentation, 0.25 * kPi);

  LimitSetOptions opt;
  opt.max_len = params.max_len;
  opt.gap_min = params.gap_min;
  opt.dedupe_radius = params.dedupe_radius;
  opt.budget = params.budget;
  f.sample = lift_acausal(approximate_limit_set(*f.presentation, opt));

  // declared mesh: refinement increment against the two-letters-coarser
  // sample, plus the dedupe thinning
  double increment = 0.0;
  if (params.max_len > 3) {
    LimitSetOptions coarse = opt;
    coarse.max_len = params.max_len - 2;
    const LimitSetSample S0 = approximate_limit_set(*f.presentation, coarse);
    for (const auto& p : f.sample.points) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& q : S0.points)
        nearest = std::min(nearest, std::acos(clamp01(std::abs(
                                        p.point.rep.dot(q.point.rep)))));
      increment = std::max(increment, nearest);
    }
  }
  f.mesh = 2.0 * increment + 2.0 * params.dedupe_radius;
  f.params = {{"separation", params.separation},
              {"max_len", params.max_len},
              {"gap_min", params.gap_min},
              {"dedupe_radius", params.dedupe_radius}};
  return f;
}

Fixture build_fuchsian(const FuchsianParams& params) {
  require(params.n >= 2 && params.equator_count >= 8, ErrorCode::InvalidArgument,
          "fuchsian fixture: n >= 2 and a usable equator grid");
  Fixture f;
  f.kind = FixtureKind::FuchsianLatticeSphere;
  f.name = "fuchsian";
  f.n = params.n;
  const auto grid = sphere_grid(params.n - 1, params.equator_count);
  f.sample = analytic_sample(params.n, grid, 0.0);
  f.mesh = params.n == 2 ? 2.0 * kPi / params.equator_count : grid_spacing(grid);
  f.params = {{"n", params.n}, {"equator_count", params.equator_count}};
  return f;
}

Fixture build_join(const JoinParams& params) {
  require(params.n >= 3, ErrorCode::InvalidArgument, "join fixture: n >= 3");
  require(params.p >= 0 && params.p <= params.n - 2, ErrorCode::InvalidArgument,
          "join fixture: 0 <= p <= n-2");
  Fixture f;
  f.kind = FixtureKind::JoinSpheres;
  f.name = "join";
  f.n = params.n;
  f.join_p = params.p;

  // S^p spans the first p+1 coordinates of R^n
  std::vector<Vector> points;
  if (params.p == 0) {
    Vector e = Vector::Zero(params.n);
    e[0] = 1.0;
    points.push_back(e);
    points.push_back(-e);
  } else {
    for (const auto& y : sphere_grid(params.p, params.count)) {
      Vector x = Vector::Zero(params.n);
      x.head(params.p + 1) = y;
      points.push_back(x);
    }
  }
  f.sample = analytic_sample(params.n, points, 0.0);
  f.mesh = params.p == 0 ? 1e-6 : grid_spacing(points);
  f.params = {{"n", params.n}, {"p", params.p}, {"count", params.count}};
  return f;
}

Fixture build_fixture(const std::string& name, const nlohmann::json& params) {
  auto get = [&params](const char* key, auto fallback) {
    using T = decltype(fallback);
    if (params.contains(key)) return params.at(key).get<T>();
    return fallback;
  };
  if (name == "cyclic") {
    CyclicParams p;
    p.n = get("n", p.n);
    p.lambda = get("lambda", p.lambda);
    p.mu = get("mu", p.mu);
    p.max_len = get("max_len", p.max_len);
    return build_cyclic(p);
  }
  if (name == "schottky") {
    SchottkyParams p;
    p.separation = get("separation", p.separation);
    p.max_len = get("max_len", p.max_len);
    p.gap_min = get("gap_min", p.gap_min);
    p.dedupe_radius = get("dedupe_radius", p.dedupe_radius);
    return build_schottky(p);
  }
  if (name == "fuchsian") {
    FuchsianParams p;
    p.n = get("n", p.n);
    p.equator_count = get("equator_count", p.equator_count);
    return build_fuchsian(p);
  }
  if (name == "join") {
    JoinParams p;
    p.n = get("n", p.n);
    p.p = get("p", p.p);
    p.count = get("count", p.count);
    return build_join(p);
  }
  fail(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
}

InvisibleDomain::Options domain_options(const Fixture& fixture) {
  InvisibleDomain::Options opt;
  opt.mesh = fixture.mesh;
  opt.required_mode = AcausalityMode::Acausal;
  return opt;
}

InvisibleDomain build_domain(const Fixture& fixture) {
  return InvisibleDomain::from_limit_set(fixture.sample, domain_options(fixture));
}

namespace {

double dist_to_subsphere(const Vector& x, int p) {
  // distance from x in S^{n-1} to the unit sphere of the first p+1 coords
  const double proj = x.head(p + 1).norm();
  return std::acos(clamp01(proj));
}

UniversalPoint probe_point(const Vector& x, double t) { return UniversalPoint{x, t}; }

}  // namespace

Report check_diamond(const Fixture& fixture, int grid_count, std::uint64_t seed) {
  require(fixture.kind == FixtureKind::FuchsianLatticeSphere, ErrorCode::InvalidArgument,
          "check_diamond expects the fuchsian fixture");
  const InvisibleDomain D = build_domain(fixture);
  const int n = fixture.n;
  const double bound = 2.0 * fixture.mesh;

  Vector pole = Vector::Zero(n + 1);
  pole[n] = 1.0;

  double max_dev = 0.0;
  const auto grid = sphere_grid(n, grid_count, seed);
  for (const auto& x : grid) {
    const Vector p = x[n] >= 0.0 ? pole : Vector(-pole);
    const double analytic = 0.5 * kPi - sphere_distance(x, p);
    max_dev = std::max(max_dev, std::abs(D.f_plus(x) - analytic));
  }

  Rng rng(seed + 1);
  int checked = 0, skipped = 0, disagreements = 0;
  for (const auto& x : grid) {
    const double t = rng.uniform(-0.5 * kPi - 0.3, 0.5 * kPi + 0.3);
    const double d_pole = std::min(sphere_distance(x, pole),
                                   sphere_distance(x, Vector(-pole)));
    const double margin_to_boundary = std::abs(d_pole - (0.5 * kPi - std::abs(t)));
    if (margin_to_boundary <= bound) {
      ++skipped;
      continue;
    }
    ++checked;
    const bool diamond = d_pole < 0.5 * kPi - std::abs(t);
    const bool inside = D.contains(probe_point(x, t));
    if (diamond != inside) ++disagreements;
  }

  bool boundary_empty = D.boundary_plus().empty() && D.boundary_minus().empty();

  // equator points never belong to the domain
  int equator_inside = 0;
  for (int i = 0; i < 64; ++i) {
    Vector xe = embed_equator(sphere_grid(n - 1, 64)[i]);
    for (double t : {-0.7, 0.0, 0.4}) {
      if (D.contains(probe_point(xe, t))) ++equator_inside;
    }
  }

  Report report;
  report.data = {{"fixture", fixture.name},
                 {"mesh", fixture.mesh},
                 {"bound", bound},
                 {"max_fplus_deviation", max_dev},
                 {"membership_checked", checked},
                 {"membership_skipped_band", skipped},
                 {"membership_disagreements", disagreements},
                 {"boundary_empty", boundary_empty},
                 {"equator_inside", equator_inside}};
  report.pass = max_dev <= bound && disagreements == 0 && boundary_empty &&
                equator_inside == 0;
  report.data["pass"] = report.pass;
  return report;
}

Report check_join(const Fixture& fixture, int grid_count, std::uint64_t seed) {
  require(fixture.kind == FixtureKind::JoinSpheres, ErrorCode::InvalidArgument,
          "check_join expects the join fixture");
  const int n = fixture.n;
  const int p = fixture.join_p;
  const int q = n - p - 2;
  const double bound = 2.0 * fixture.mesh;
  const InvisibleDomain D = build_domain(fixture);

  // Lambda^+ graph against the analytic join height d_0(., S^p)
  double max_graph_dev = 0.0;
  const auto eq_grid = sphere_grid(n - 1, grid_count, seed);
  for (const auto& x : eq_grid) {
    const double g = D.f_plus(embed_equator(x));
    max_graph_dev = std::max(max_graph_dev, std::abs(g - dist_to_subsphere(x, p)));
  }

  // S^q slice sits at height pi/2
  double max_sq_dev = 0.0;
  {
    std::vector<Vector> sq;
    if (q == 0) {
      Vector x = Vector::Zero(n - 1);
      x[n - 2] = 1.0;
      sq.push_back(x);
      sq.push_back(-x);
    } else {
      for (const auto& y : sphere_grid(q, 128)) {
        Vector x = Vector::Zero(n - 1);
        x.tail(q + 1) = y;
        sq.push_back(x);
      }
    }
    for (const auto& x : sq)
      max_sq_dev = std::max(max_sq_dev,
                            std::abs(D.f_plus(embed_equator(x)) - 0.5 * kPi));
  }

  // future-core domain from the Lambda^+ graph versus the dual cone of
  // S^p u S^q lift samples
  std::vector<UniversalPoint> lambda_plus;
  for (const auto& x : eq_grid)
    lambda_plus.push_back(UniversalPoint{x, D.f_plus(embed_equator(x))});
  InvisibleDomain::Options plus_opt;
  plus_opt.mesh = std::max(fixture.mesh, grid_spacing(eq_grid));
  plus_opt.required_mode = AcausalityMode::Achronal;
  const InvisibleDomain Dplus(lambda_plus, plus_opt);

  std::vector<Vector> dual_gens;  // Klein lifts, ambient n+2
  for (const auto& s : fixture.sample.points) dual_gens.push_back(s.point.rep);
  {
    std::vector<Vector> sq;
    if (q == 0) {
      Vector x = Vector::Zero(n - 1);
      x[n - 2] = 1.0;
      sq.push_back(x);
      sq.push_back(-x);
    } else {
      for (const auto& y : sphere_grid(q, 128)) {
        Vector x = Vector::Zero(n - 1);
        x.tail(q + 1) = y;
        sq.push_back(x);
      }
    }
    for (const auto& x : sq) dual_gens.push_back(boundary_klein(x, 0.5 * kPi));
  }
  const Matrix J = gram_matrix(n, Basis::Diagonal);

  Rng rng(seed + 3);
  int checked = 0, disagreements = 0, skipped = 0;
  const double band = 2.0 * plus_opt.mesh;
  for (int i = 0; i < 4000; ++i) {
    Vector x = rng.sphere_point(n + 1);
    x[n] = std::abs(x[n]);  // E1 hemisphere
    x /= x.norm();
    const double t = rng.uniform(-0.5 * kPi, kPi);
    const double fp = Dplus.f_plus(x), fm = Dplus.f_minus(x);
    if (std::min(std::abs(t - fp), std::abs(t - fm)) <= band) {
      ++skipped;
      continue;
    }
    const bool envelope = fm < t && t < fp;
    // dual cone generated by the S^p and S^q lifts: the generators have a
    // vanishing hemisphere coordinate, so the pairing only sees the first
    // n+2 coordinates of the probe's Klein representative
    bool dual = true;
    {
      Vector u(n + 2);
      u[0] = std::cos(t);
      u[1] = std::sin(t);
      u.segment(2, n) = x.head(n);
      Vector ju = J * u;
      for (const auto& w : dual_gens) {
        if (w.dot(ju) >= 0.0) {
          dual = false;
          break;
        }
      }
    }
    ++checked;
    if (envelope != dual) ++disagreements;
  }

  Report report;
  report.data = {{"fixture", fixture.name},
                 {"n", n},
                 {"p", p},
                 {"q", q},
                 {"mesh", fixture.mesh},
                 {"bound", bound},
                 {"max_graph_deviation", max_graph_dev},
                 {"max_sq_slice_deviation", max_sq_dev},
                 {"dual_checked", checked},
                 {"dual_skipped_band", skipped},
                 {"dual_disagreements", disagreements}};
  report.pass = max_graph_dev <= bound && max_sq_dev <= bound && disagreements == 0;
  report.data["pass"] = report.pass;
  return report;
}

Report properness_probe(const Fixture& fixture, int probe_count, int max_len,
                        std::uint64_t seed) {
  require(fixture.presentation.has_value(), ErrorCode::InvalidArgument,
          "properness_probe needs a matrix fixture");
  const InvisibleDomain D = build_domain(fixture);
  const GroupPresentation& G = *fixture.presentation;
  const int n = fixture.n;
  const int m = n + 2;

  // small ball deep in the domain, centred over the hemisphere pole
  Vector pole = Vector::Zero(n + 1);
  pole[n] = 1.0;
  const double t_mid = 0.5 * (D.f_plus(pole) + D.f_minus(pole));
  const double ball_radius = 0.1;
  Rng rng(seed);
  std::vector<Vector> ball_reps;  // Klein reps, ambient n+3
  Vector center_rep;
  {
    const UniversalPoint center{pole, t_mid};
    center_rep = universal_to_klein(center).rep;
    int kept = 0;
    while (kept < 40) {
      Vector x = pole + ball_radius * rng.gaussian_vector(n + 1);
      x /= x.norm();
      const double t = t_mid + rng.uniform(-ball_radius, ball_radius);
      const UniversalPoint p{x, t};
      if (sphere_distance(x, pole) > ball_radius || !D.contains(p)) continue;
      ball_reps.push_back(universal_to_klein(p).rep);
      ++kept;
    }
  }
  double rep_radius = 0.0;
  for (const auto& r : ball_reps)
    rep_radius = std::max(rep_radius, std::acos(clamp01(std::abs(r.dot(center_rep)))));

  // probe points for orbit acausality
  std::vector<UniversalPoint> probes;
  while (static_cast<int>(probes.size()) < probe_count) {
    Vector x = rng.sphere_point(n + 1);
    const double fp = D.f_plus(x), fm = D.f_minus(x);
    if (fp - fm < 4.0 * fixture.mesh) continue;
    const double t = rng.uniform(fm + fixture.mesh, fp - fixture.mesh);
    probes.push_back(UniversalPoint{x, t});
  }
  std::vector<Vector> probe_reps;
  for (const auto& p : probes) probe_reps.push_back(universal_to_klein(p).rep);

  std::vector<long> returns(max_len + 1, 0);
  long violations = 0;
  visit_words(
      G, max_len,
      [&](const std::string& word, const GroupElement& e) {
        // embedded action: diag(e, 1) on ambient n+3
        bool returned = false;
        for (const auto& r : ball_reps) {
          Vector image(m + 1);
          image.head(m) = e.matrix * r.head(m);
          image[m] = r[m];
          const double d = std::acos(clamp01(std::abs(image.dot(center_rep))));
          if (d <= rep_radius) {
            returned = true;
            break;
          }
        }
        if (returned) returns[static_cast<int>(word.size())] += 1;

        for (std::size_t i = 0; i < probes.size(); ++i) {
          Vector image(m + 1);
          image.head(m) = e.matrix * probe_reps[i].head(m);
          image[m] = probe_reps[i][m];
          const UniversalPoint moved =
              D.lift_to_slab(make_ein_klein(image, 1e-6));
          if (causal_classify(moved, probes[i]) != CausalRelation::Unrelated)
            ++violations;
        }
        return true;
      },
      kDefaultWordBudget);

  std::vector<long> cumulative(max_len + 1, 0);
  long acc = 0;
  for (int len = 1; len <= max_len; ++len) {
    acc += returns[len];
    cumulative[len] = acc;
  }
  const bool stabilized =
      max_len >= 4 && cumulative[max_len] == cumulative[max_len - 2];

  Report report;
  report.data = {{"fixture", fixture.name},
                 {"max_len", max_len},
                 {"probe_count", probe_count},
                 {"identity_returns", true},
                 {"returns_cumulative", cumulative},
                 {"stabilized", stabilized},
                 {"acausality_violations", violations}};
  report.pass = violations == 0 && stabilized;
  report.data["pass"] = report.pass;
  return report;
}

Report dual_cone_agreement(const Fixture& fixture, int probe_count,
                           std::uint64_t seed) {
  const InvisibleDomain D = build_domain(fixture);
  const int n = fixture.n;
  Rng rng(seed);
  const double band = 2.0 * D.mesh();
  int disagreements = 0, in_band = 0, out_of_band_disagreements = 0;
  for (int i = 0; i < probe_count; ++i) {
    const Vector x = rng.sphere_point(n + 1);
    const double t = D.slab_center() + rng.uniform(-0.5 * kPi, 0.5 * kPi);
    const UniversalPoint p{x, t};
    const bool envelope = D.contains(p, 0.0, false);
    const bool dual = D.dual_cone_contains(p);
    const double boundary_dist =
        std::min(std::abs(t - D.f_plus(x)), std::abs(t - D.f_minus(x)));
    if (boundary_dist <= band) ++in_band;
    if (envelope != dual) {
      ++disagreements;
      if (boundary_dist > band) ++out_of_band_disagreements;
    }
  }
  Report report;
  report.data = {{"fixture", fixture.name},
                 {"probes", probe_count},
                 {"band", band},
                 {"in_band", in_band},
                 {"disagreements", disagreements},
                 {"out_of_band_disagreements", out_of_band_disagreements}};
  report.pass = out_of_band_disagreements == 0 &&
                disagreements <= probe_count / 100;
  report.data["pass"] = report.pass;
  return report;
}

Report region_partition(const Fixture& fixture, int probe_count, std::uint64_t seed) {
  const InvisibleDomain D = build_domain(fixture);
  const int n = fixture.n;
  Rng rng(seed);
  long contained = 0, core = 0, past_of_boundary = 0, horizon = 0, labeled = 0;
  for (int i = 0; i < probe_count; ++i) {
    Vector x = rng.sphere_point(n + 1);
    x[n] = std::abs(x[n]);
    x /= x.norm();
    const double t = D.slab_center() + rng.uniform(-0.5 * kPi, 0.5 * kPi);
    const UniversalPoint p{x, t};
    if (!D.contains(p)) continue;
    if (D.component_of(p) != InvisibleDomain::Component::E1) continue;
    ++contained;
    const RegionClassification c = D.classify_region(p);
    switch (c.future_side) {
      case RegionLabel::FutureCore: ++core; ++labeled; break;
      case RegionLabel::PastOfBoundary: ++past_of_boundary; ++labeled; break;
      case RegionLabel::FutureHorizon: ++horizon; ++labeled; break;
      default: break;
    }
  }
  Report report;
  report.data = {{"fixture", fixture.name},
                 {"probes", probe_count},
                 {"contained", contained},
                 {"future_core", core},
                 {"past_of_boundary", past_of_boundary},
                 {"future_horizon", horizon},
                 {"labeled", labeled}};
  report.pass = contained > 0 && labeled == contained;
  report.data["pass"] = report.pass;
  return report;
}

Report verify_suite(const std::string& name, const nlohmann::json& params) {
  Report report;
  if (name == "fuchsian-diamond") {
    return check_diamond(build_fixture("fuchsian", params));
  }
  if (name == "join") {
    return check_join(build_fixture("join", params));
  }
  if (name == "schottky") {
    const Fixture f = build_fixture("schottky", params);
    const NegativityReport neg = certify_negative(f.sample);
    const Report dual = dual_cone_agreement(f, 10000);
    const Report regions = region_partition(f, 10000);
    const Report proper = properness_probe(f, 50, 8);
    report.pass = neg.negative && dual.pass && regions.pass && proper.pass;
    report.data = {{"fixture", "schottky"},
                   {"negative", neg.negative},
                   {"worst_inner_product", neg.worst_value},
                   {"sample_size", f.sample.size()},
                   {"invariance_residual", f.sample.invariance_residual},
                   {"mesh", f.mesh},
                   {"dual_cone", dual.data},
                   {"regions", regions.data},
                   {"properness", proper.data},
                   {"pass", report.pass}};
    return report;
  }
  if (name == "cyclic") {
    const Fixture f = build_fixture("cyclic", params);
    const bool two_points = f.sample.size() == 2;
    double pole_dev = 0.0;
    if (two_points) {
      // poles of a(lambda, mu) are the split-basis axes e_1, e_{n+2}
      const int m = f.n + 2;
      Vector wplus = Vector::Zero(m), wminus = Vector::Zero(m);
      wplus[0] = 1.0;
      wplus[2] = 1.0;
      wminus[0] = 1.0;
      wminus[2] = -1.0;
      wplus /= wplus.norm();
      wminus /= wminus.norm();
      double d0 = std::numeric_limits<double>::infinity(),
             d1 = std::numeric_limits<double>::infinity();
      for (const auto& p : f.sample.points) {
        d0 = std::min(d0, std::acos(clamp01(std::abs(p.point.rep.dot(wplus)))));
        d1 = std::min(d1, std::acos(clamp01(std::abs(p.point.rep.dot(wminus)))));
      }
      pole_dev = std::max(d0, d1);
    }
    report.pass = two_points && pole_dev <= 1e-9;
    report.data = {{"fixture", "cyclic"},
                   {"sample_size", f.sample.size()},
                   {"pole_deviation", pole_dev},
                   {"pass", report.pass}};
    return report;
  }
  fail(ErrorCode::InvalidArgument, "unknown verification suite '" + name + "'");
}

}  // namespace einkit
