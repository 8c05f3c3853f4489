#include "einkit.h"

#include <cstring>
#include <limits>
#include <string>

#include "einkit/fixtures.hpp"
#include "einkit/io.hpp"

using namespace einkit;

struct ek_group {
  GroupPresentation presentation;
};

struct ek_limitset {
  LimitSetSample sample;
};

struct ek_domain {
  InvisibleDomain domain;
};

namespace {

thread_local std::string g_last_error;

ek_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return EK_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return EK_ERR_DIMENSION_MISMATCH;
    case ErrorCode::BasisMismatch: return EK_ERR_BASIS_MISMATCH;
    case ErrorCode::NotInGroup: return EK_ERR_NOT_IN_GROUP;
    case ErrorCode::AmbiguousPoles: return EK_ERR_AMBIGUOUS_POLES;
    case ErrorCode::NumericalFailure: return EK_ERR_NUMERICAL;
    case ErrorCode::BudgetExceeded: return EK_ERR_BUDGET_EXCEEDED;
    case ErrorCode::EmptySample: return EK_ERR_EMPTY_SAMPLE;
    case ErrorCode::NotAcausal: return EK_ERR_NOT_ACAUSAL;
    case ErrorCode::NotNegative: return EK_ERR_NOT_NEGATIVE;
    case ErrorCode::InconsistentLift: return EK_ERR_INCONSISTENT_LIFT;
    case ErrorCode::OracleDisagreement: return EK_ERR_ORACLE_DISAGREEMENT;
    case ErrorCode::NotContained: return EK_ERR_NOT_CONTAINED;
    case ErrorCode::EmptyBoundary: return EK_ERR_EMPTY_BOUNDARY;
    case ErrorCode::PingPongFailure: return EK_ERR_PING_PONG;
    case ErrorCode::DegenerateSample: return EK_ERR_DEGENERATE_SAMPLE;
    case ErrorCode::IoError: return EK_ERR_IO;
    case ErrorCode::ParseError: return EK_ERR_PARSE;
  }
  return EK_ERR_UNKNOWN;
}

// Runs the body, translating exceptions into status codes and the
// thread-local message.
template <typename Fn>
ek_status guarded(Fn&& fn) {
  try {
    fn();
    return EK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EK_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown error";
    return EK_ERR_UNKNOWN;
  }
}

Basis basis_of(ek_basis b) { return b == EK_BASIS_SPLIT ? Basis::Split : Basis::Diagonal; }

Matrix map_matrix(int n, const double* data) {
  require(data != nullptr, ErrorCode::InvalidArgument, "matrix pointer is NULL");
  require(n >= 2, ErrorCode::InvalidArgument, "n must be >= 2");
  const int m = n + 2;
  Matrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = data[i * m + j];
  return g;
}

void write_matrix(const Matrix& g, double* out) {
  const int m = static_cast<int>(g.rows());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out[i * m + j] = g(i, j);
}

Vector map_vector(int len, const double* data) {
  require(data != nullptr, ErrorCode::InvalidArgument, "vector pointer is NULL");
  Vector v(len);
  for (int i = 0; i < len; ++i) v[i] = data[i];
  return v;
}

void check_out(const void* p) {
  require(p != nullptr, ErrorCode::InvalidArgument, "output pointer is NULL");
}

nlohmann::json parse_params(const char* params_json) {
  if (params_json == nullptr || *params_json == '\0')
    return nlohmann::json::object();
  try {
    return nlohmann::json::parse(params_json);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("params: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* ek_version(void) { return "0.1.0"; }

const char* ek_last_error(void) { return g_last_error.c_str(); }

void ek_string_free(char* str) { delete[] str; }

ek_status ek_validate(int n, ek_basis basis, const double* matrix,
                      double* out_residual, double* out_det,
                      int* out_identity_component) {
  return guarded([&] {
    const GroupElement g = validate(map_matrix(n, matrix), basis_of(basis));
    if (out_residual) *out_residual = g.form_residual;
    if (out_det) *out_det = g.det;
    if (out_identity_component) *out_identity_component = is_identity_component(g);
  });
}

ek_status ek_cartan(int n, ek_basis basis, const double* matrix, double* out_lambda,
                    double* out_mu, double* out_k, double* out_l) {
  return guarded([&] {
    const GroupElement g = validate(map_matrix(n, matrix), basis_of(basis));
    const CartanFactors f = cartan_decompose(g);
    if (out_lambda) *out_lambda = f.lambda;
    if (out_mu) *out_mu = f.mu;
    if (out_k) write_matrix(f.k.matrix, out_k);
    if (out_l) write_matrix(f.l.matrix, out_l);
  });
}

ek_status ek_p1_data(int n, ek_basis basis, const double* matrix, double* out_gap,
                     double* out_p_plus, double* out_p_minus) {
  return guarded([&] {
    const GroupElement g = validate(map_matrix(n, matrix), basis_of(basis));
    const P1Data data = p1_data(g);
    if (out_gap) *out_gap = data.gap;
    if (out_p_plus)
      for (int i = 0; i < n + 2; ++i) out_p_plus[i] = data.p_plus.rep[i];
    if (out_p_minus)
      for (int i = 0; i < n + 2; ++i) out_p_minus[i] = data.p_minus.rep[i];
  });
}

ek_status ek_weyl_element(int n, ek_basis basis, double lambda, double mu,
                          double* out_matrix) {
  return guarded([&] {
    check_out(out_matrix);
    write_matrix(weyl_element(n, lambda, mu, basis_of(basis)).matrix, out_matrix);
  });
}

ek_status ek_change_basis(int n, ek_basis from, ek_basis to, const double* v_in,
                          double* v_out) {
  return guarded([&] {
    check_out(v_out);
    const AmbientVector v{map_vector(n + 2, v_in), basis_of(from)};
    const AmbientVector w = change_basis(v, basis_of(to));
    for (int i = 0; i < n + 2; ++i) v_out[i] = w.coords[i];
  });
}

ek_status ek_group_create(int n, ek_basis basis, const double* generators, int count,
                          int relation_hint_unknown, ek_group** out) {
  return guarded([&] {
    check_out(out);
    require(count >= 1, ErrorCode::InvalidArgument, "need at least one generator");
    const int m = n + 2;
    std::vector<GroupElement> gens;
    for (int k = 0; k < count; ++k)
      gens.push_back(validate(map_matrix(n, generators + k * m * m), basis_of(basis)));
    *out = new ek_group{make_presentation(
        std::move(gens),
        relation_hint_unknown ? RelationHint::Unknown : RelationHint::Free)};
  });
}

ek_status ek_group_load_json(const char* path, ek_group** out) {
  return guarded([&] {
    check_out(out);
    require(path != nullptr, ErrorCode::InvalidArgument, "path is NULL");
    *out = new ek_group{load_generators_json(path)};
  });
}

void ek_group_destroy(ek_group* group) { delete group; }

ek_status ek_group_spatial_dim(const ek_group* group, int* out_n) {
  return guarded([&] {
    check_out(out_n);
    require(group != nullptr, ErrorCode::InvalidArgument, "group is NULL");
    *out_n = group->presentation.n;
  });
}

ek_status ek_group_word(const ek_group* group, const char* word, double* out_matrix) {
  return guarded([&] {
    check_out(out_matrix);
    require(group != nullptr && word != nullptr, ErrorCode::InvalidArgument,
            "group/word is NULL");
    write_matrix(evaluate_word(group->presentation, word).matrix, out_matrix);
  });
}

ek_status ek_limitset_compute(const ek_group* group, int max_len, double gap_min,
                              double dedupe_radius, size_t budget, ek_limitset** out) {
  return guarded([&] {
    check_out(out);
    require(group != nullptr, ErrorCode::InvalidArgument, "group is NULL");
    LimitSetOptions options;
    options.max_len = max_len;
    options.gap_min = gap_min;
    options.dedupe_radius = dedupe_radius;
    options.budget = budget == 0 ? kDefaultWordBudget : budget;
    *out = new ek_limitset{approximate_limit_set(group->presentation, options)};
  });
}

void ek_limitset_destroy(ek_limitset* ls) { delete ls; }

ek_status ek_limitset_size(const ek_limitset* ls, size_t* out_size) {
  return guarded([&] {
    check_out(out_size);
    require(ls != nullptr, ErrorCode::InvalidArgument, "limitset is NULL");
    *out_size = ls->sample.size();
  });
}

ek_status ek_limitset_point(const ek_limitset* ls, size_t index, double* out_rep,
                            double* out_gap, double* out_t, char* out_word,
                            size_t word_cap) {
  return guarded([&] {
    require(ls != nullptr, ErrorCode::InvalidArgument, "limitset is NULL");
    require(index < ls->sample.size(), ErrorCode::InvalidArgument,
            "point index out of range");
    const LimitPoint& p = ls->sample.points[index];
    if (out_rep)
      for (int i = 0; i < p.point.ambient_dim(); ++i) out_rep[i] = p.point.rep[i];
    if (out_gap) *out_gap = p.gap;
    if (out_t) {
      *out_t = ls->sample.lift ? (*ls->sample.lift)[index].t
                               : std::numeric_limits<double>::quiet_NaN();
    }
    if (out_word && word_cap > 0) {
      std::strncpy(out_word, p.word.c_str(), word_cap - 1);
      out_word[word_cap - 1] = '\0';
    }
  });
}

ek_status ek_limitset_certify_negative(const ek_limitset* ls, int* out_negative,
                                       double* out_worst_value, size_t* out_worst_i,
                                       size_t* out_worst_j) {
  return guarded([&] {
    require(ls != nullptr, ErrorCode::InvalidArgument, "limitset is NULL");
    const NegativityReport report = certify_negative(ls->sample);
    if (out_negative) *out_negative = report.negative;
    if (out_worst_value) *out_worst_value = report.worst_value;
    if (out_worst_i) *out_worst_i = report.worst_i;
    if (out_worst_j) *out_worst_j = report.worst_j;
  });
}

ek_status ek_limitset_lift(ek_limitset* ls) {
  return guarded([&] {
    require(ls != nullptr, ErrorCode::InvalidArgument, "limitset is NULL");
    ls->sample = lift_acausal(ls->sample);
  });
}

ek_status ek_limitset_invariance_residual(const ek_limitset* ls, const ek_group* group,
                                          double* out_residual) {
  return guarded([&] {
    check_out(out_residual);
    require(ls != nullptr && group != nullptr, ErrorCode::InvalidArgument,
            "limitset/group is NULL");
    *out_residual = invariance_residual(ls->sample, group->presentation);
  });
}

ek_status ek_limitset_save_csv(const ek_limitset* ls, const char* path) {
  return guarded([&] {
    require(ls != nullptr && path != nullptr, ErrorCode::InvalidArgument,
            "limitset/path is NULL");
    save_limit_set_csv(ls->sample, path);
  });
}

ek_status ek_limitset_load_csv(const char* path, ek_limitset** out) {
  return guarded([&] {
    check_out(out);
    require(path != nullptr, ErrorCode::InvalidArgument, "path is NULL");
    *out = new ek_limitset{load_limit_set_csv(path)};
  });
}

ek_status ek_fixture_limitset(const char* name, const char* params_json,
                              ek_limitset** out, double* out_mesh) {
  return guarded([&] {
    check_out(out);
    require(name != nullptr, ErrorCode::InvalidArgument, "fixture name is NULL");
    const Fixture fixture = build_fixture(name, parse_params(params_json));
    if (out_mesh) *out_mesh = fixture.mesh;
    *out = new ek_limitset{fixture.sample};
  });
}

ek_status ek_domain_create(const ek_limitset* ls, double mesh, ek_domain** out) {
  return guarded([&] {
    check_out(out);
    require(ls != nullptr, ErrorCode::InvalidArgument, "limitset is NULL");
    InvisibleDomain::Options options;
    options.mesh = mesh;
    *out = new ek_domain{InvisibleDomain::from_limit_set(ls->sample, options)};
  });
}

void ek_domain_destroy(ek_domain* domain) { delete domain; }

ek_status ek_domain_dim(const ek_domain* domain, int* out_n) {
  return guarded([&] {
    check_out(out_n);
    require(domain != nullptr, ErrorCode::InvalidArgument, "domain is NULL");
    *out_n = domain->domain.n();
  });
}

ek_status ek_domain_envelopes(const ek_domain* domain, const double* x,
                              double* out_fplus, double* out_fminus) {
  return guarded([&] {
    require(domain != nullptr, ErrorCode::InvalidArgument, "domain is NULL");
    const Vector v = map_vector(domain->domain.n() + 1, x);
    if (out_fplus) *out_fplus = domain->domain.f_plus(v);
    if (out_fminus) *out_fminus = domain->domain.f_minus(v);
  });
}

ek_status ek_domain_contains(const ek_domain* domain, const double* x, double t,
                             int cross_check, int* out_inside) {
  return guarded([&] {
    check_out(out_inside);
    require(domain != nullptr, ErrorCode::InvalidArgument, "domain is NULL");
    const Vector v = map_vector(domain->domain.n() + 1, x);
    *out_inside = domain->domain.contains(UniversalPoint{v, t}, cross_check != 0);
  });
}

ek_status ek_domain_classify(const ek_domain* domain, const double* x, double t,
                             double horizon_band, ek_region_label* out_future,
                             ek_region_label* out_past) {
  return guarded([&] {
    require(domain != nullptr, ErrorCode::InvalidArgument, "domain is NULL");
    const Vector v = map_vector(domain->domain.n() + 1, x);
    const RegionClassification c =
        domain->domain.classify_region(UniversalPoint{v, t}, horizon_band);
    auto convert = [](RegionLabel label) {
      switch (label) {
        case RegionLabel::FutureCore: return EK_REGION_FUTURE_CORE;
        case RegionLabel::PastCore: return EK_REGION_PAST_CORE;
        case RegionLabel::PastOfBoundary: return EK_REGION_PAST_OF_BOUNDARY;
        case RegionLabel::FutureOfBoundary: return EK_REGION_FUTURE_OF_BOUNDARY;
        case RegionLabel::ConformalBoundary: return EK_REGION_CONFORMAL_BOUNDARY;
        case RegionLabel::FutureHorizon: return EK_REGION_FUTURE_HORIZON;
        case RegionLabel::PastHorizon: return EK_REGION_PAST_HORIZON;
        case RegionLabel::OutsideOmega: return EK_REGION_OUTSIDE_OMEGA;
      }
      return EK_REGION_OUTSIDE_OMEGA;
    };
    if (out_future) *out_future = convert(c.future_side);
    if (out_past) *out_past = convert(c.past_side);
  });
}

ek_status ek_domain_export_envelope_csv(const ek_domain* domain, int grid_count,
                                        unsigned long seed, const char* path) {
  return guarded([&] {
    require(domain != nullptr && path != nullptr, ErrorCode::InvalidArgument,
            "domain/path is NULL");
    save_envelope_grid_csv(domain->domain, grid_count, seed, path);
  });
}

ek_status ek_domain_export_region_csv(const ek_domain* domain, int probe_count,
                                      unsigned long seed, const char* path) {
  return guarded([&] {
    require(domain != nullptr && path != nullptr, ErrorCode::InvalidArgument,
            "domain/path is NULL");
    save_region_grid_csv(domain->domain, probe_count, seed, path);
  });
}

ek_status ek_domain_export_obj(const ek_domain* domain, int surface, int resolution,
                               const char* path) {
  return guarded([&] {
    require(domain != nullptr && path != nullptr, ErrorCode::InvalidArgument,
            "domain/path is NULL");
    require(surface >= 0 && surface <= 2, ErrorCode::InvalidArgument,
            "surface must be 0 (f+), 1 (f-) or 2 (horizon)");
    export_surface_obj(domain->domain, static_cast<MeshSurface>(surface), resolution,
                       path);
  });
}

ek_status ek_plane_classify(int n, const double* v1, const double* v2,
                            ek_geodesic_class* out_class) {
  return guarded([&] {
    check_out(out_class);
    const Plane2 P(map_vector(n + 2, v1), map_vector(n + 2, v2));
    switch (classify(P)) {
      case GeodesicClass::TimelikeAdS: *out_class = EK_GEODESIC_TIMELIKE_ADS; break;
      case GeodesicClass::LightlikeAdS: *out_class = EK_GEODESIC_LIGHTLIKE_ADS; break;
      case GeodesicClass::LightlikeEin: *out_class = EK_GEODESIC_LIGHTLIKE_EIN; break;
      case GeodesicClass::NotCausal: *out_class = EK_GEODESIC_NOT_CAUSAL; break;
    }
  });
}

ek_status ek_delta_metric(int ambient_dim, const double* p1, const double* p2,
                          const double* q1, const double* q2, double* out_delta) {
  return guarded([&] {
    check_out(out_delta);
    const Plane2 P(map_vector(ambient_dim, p1), map_vector(ambient_dim, p2));
    const Plane2 Q(map_vector(ambient_dim, q1), map_vector(ambient_dim, q2));
    *out_delta = delta_metric(P, Q);
  });
}

ek_status ek_fiber_distance(int ambient_dim, const double* v1, const double* v2,
                            const double* point, double* out_distance) {
  return guarded([&] {
    check_out(out_distance);
    const Plane2 P(map_vector(ambient_dim, v1), map_vector(ambient_dim, v2));
    const ProjectivePoint q =
        ProjectivePoint::from_vector(map_vector(ambient_dim, point));
    *out_distance = fiber_distance(P, q);
  });
}

ek_status ek_expansion_probe(int n, const double* matrix, ek_basis basis,
                             const double* pole, double radius, int trials,
                             unsigned long seed, double* out_c_est) {
  return guarded([&] {
    check_out(out_c_est);
    GroupElement g = validate(map_matrix(n, matrix), basis_of(basis));
    if (g.basis == Basis::Split) {
      const Matrix T = basis_change_matrix(n, Basis::Split, Basis::Diagonal);
      const Matrix Ti = basis_change_matrix(n, Basis::Diagonal, Basis::Split);
      g = validate(T * g.matrix * Ti, Basis::Diagonal, 1e-7);
    }
    const ProjectivePoint p =
        ProjectivePoint::from_vector(map_vector(n + 2, pole));
    Rng rng(seed);
    *out_c_est = expansion_probe(g, p, radius, trials, rng).c_est;
  });
}

ek_status ek_photon_from_tangent(int sphere_dim, const double* x, const double* v,
                                 double* out_frame) {
  return guarded([&] {
    check_out(out_frame);
    const Plane2 P = photon_from_tangent(map_vector(sphere_dim + 1, x),
                                         map_vector(sphere_dim + 1, v));
    const int m = sphere_dim + 3;
    for (int i = 0; i < m; ++i) {
      out_frame[i] = P.frame()(i, 0);
      out_frame[m + i] = P.frame()(i, 1);
    }
  });
}

ek_status ek_photon_to_tangent(int sphere_dim, const double* frame, double* out_x,
                               double* out_v) {
  return guarded([&] {
    require(out_x != nullptr && out_v != nullptr, ErrorCode::InvalidArgument,
            "output pointer is NULL");
    const int m = sphere_dim + 3;
    const Plane2 P(map_vector(m, frame), map_vector(m, frame + m));
    Vector x, v;
    photon_to_tangent(P, x, v);
    for (int i = 0; i <= sphere_dim; ++i) {
      out_x[i] = x[i];
      out_v[i] = v[i];
    }
  });
}

ek_status ek_intersect_domain(const ek_domain* domain, const double* v1,
                              const double* v2, int samples, int* out_hits,
                              double* out_t_enter, double* out_t_exit,
                              int* out_runs) {
  return guarded([&] {
    require(domain != nullptr, ErrorCode::InvalidArgument, "domain is NULL");
    const int m = domain->domain.n() + 2;
    const Plane2 P(map_vector(m, v1), map_vector(m, v2));
    const DomainIntersection hit = intersect_domain(P, domain->domain, samples);
    if (out_hits) *out_hits = hit.hits;
    if (out_t_enter) *out_t_enter = hit.t_enter;
    if (out_t_exit) *out_t_exit = hit.t_exit;
    if (out_runs) *out_runs = hit.runs;
  });
}

ek_status ek_verify(const char* suite, const char* params_json, int* out_pass,
                    char** out_report_json) {
  return guarded([&] {
    require(suite != nullptr, ErrorCode::InvalidArgument, "suite name is NULL");
    const Report report = verify_suite(suite, parse_params(params_json));
    if (out_pass) *out_pass = report.pass;
    if (out_report_json) {
      const std::string text = report.data.dump(2);
      char* buffer = new char[text.size() + 1];
      std::memcpy(buffer, text.c_str(), text.size() + 1);
      *out_report_json = buffer;
    }
  });
}

}  // extern "C"
