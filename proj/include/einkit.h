/* einkit C API: numerical toolkit for anti-de Sitter / Einstein-universe
 * geometry, limit sets of matrix subgroups of O(2,n), invisible domains with
 * their black-hole region decomposition, and the causal-geodesic space.
 *
 * Conventions:
 *   - every function returns an ek_status (EK_OK == 0); on failure
 *     ek_last_error() describes the problem (thread-local storage);
 *   - matrices are (n+2) x (n+2) row-major double arrays;
 *   - ambient coordinates are in the diagonal basis
 *     q(u, v, x_1..x_n) = -u^2 - v^2 + sum x_i^2 unless a basis argument
 *     says otherwise;
 *   - handles are created by ek_*_create / ek_*_compute functions and must
 *     be released with the matching ek_*_destroy.
 */
#ifndef EINKIT_H
#define EINKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define EK_API __declspec(dllexport)
#else
#define EK_API __attribute__((visibility("default")))
#endif

typedef enum ek_status {
  EK_OK = 0,
  EK_ERR_INVALID_ARGUMENT = 1,
  EK_ERR_DIMENSION_MISMATCH = 2,
  EK_ERR_BASIS_MISMATCH = 3,
  EK_ERR_NOT_IN_GROUP = 4,
  EK_ERR_AMBIGUOUS_POLES = 5,
  EK_ERR_NUMERICAL = 6,
  EK_ERR_BUDGET_EXCEEDED = 7,
  EK_ERR_EMPTY_SAMPLE = 8,
  EK_ERR_NOT_ACAUSAL = 9,
  EK_ERR_NOT_NEGATIVE = 10,
  EK_ERR_INCONSISTENT_LIFT = 11,
  EK_ERR_ORACLE_DISAGREEMENT = 12,
  EK_ERR_NOT_CONTAINED = 13,
  EK_ERR_EMPTY_BOUNDARY = 14,
  EK_ERR_PING_PONG = 15,
  EK_ERR_DEGENERATE_SAMPLE = 16,
  EK_ERR_IO = 17,
  EK_ERR_PARSE = 18,
  EK_ERR_UNKNOWN = 19
} ek_status;

typedef enum ek_basis { EK_BASIS_DIAGONAL = 0, EK_BASIS_SPLIT = 1 } ek_basis;

typedef enum ek_geodesic_class {
  EK_GEODESIC_TIMELIKE_ADS = 0,
  EK_GEODESIC_LIGHTLIKE_ADS = 1,
  EK_GEODESIC_LIGHTLIKE_EIN = 2,
  EK_GEODESIC_NOT_CAUSAL = 3
} ek_geodesic_class;

typedef enum ek_region_label {
  EK_REGION_FUTURE_CORE = 0,
  EK_REGION_PAST_CORE = 1,
  EK_REGION_PAST_OF_BOUNDARY = 2,
  EK_REGION_FUTURE_OF_BOUNDARY = 3,
  EK_REGION_CONFORMAL_BOUNDARY = 4,
  EK_REGION_FUTURE_HORIZON = 5,
  EK_REGION_PAST_HORIZON = 6,
  EK_REGION_OUTSIDE_OMEGA = 7
} ek_region_label;

typedef struct ek_group ek_group;
typedef struct ek_limitset ek_limitset;
typedef struct ek_domain ek_domain;

/* library metadata and error reporting */
EK_API const char* ek_version(void);
EK_API const char* ek_last_error(void);
EK_API void ek_string_free(char* str);

/* ---- linear algebra of the form and single matrices ---- */

/* residual of the isometry condition, determinant, identity-component flag */
EK_API ek_status ek_validate(int n, ek_basis basis, const double* matrix,
                             double* out_residual, double* out_det,
                             int* out_identity_component);

/* g = k a(lambda,mu) l with k,l block-orthogonal (diagonal-basis factors);
 * any of the out pointers may be NULL */
EK_API ek_status ek_cartan(int n, ek_basis basis, const double* matrix,
                           double* out_lambda, double* out_mu, double* out_k,
                           double* out_l);

/* gap = lambda - mu and the attracting/repelling poles (diagonal basis,
 * unit vectors of length n+2) */
EK_API ek_status ek_p1_data(int n, ek_basis basis, const double* matrix,
                            double* out_gap, double* out_p_plus,
                            double* out_p_minus);

EK_API ek_status ek_weyl_element(int n, ek_basis basis, double lambda, double mu,
                                 double* out_matrix);

/* v_out = change of coordinates of v_in into `to` (length n+2) */
EK_API ek_status ek_change_basis(int n, ek_basis from, ek_basis to,
                                 const double* v_in, double* v_out);

/* ---- groups ---- */

EK_API ek_status ek_group_create(int n, ek_basis basis, const double* generators,
                                 int count, int relation_hint_unknown,
                                 ek_group** out);
EK_API ek_status ek_group_load_json(const char* path, ek_group** out);
EK_API void ek_group_destroy(ek_group* group);
EK_API ek_status ek_group_spatial_dim(const ek_group* group, int* out_n);

/* matrix of a word such as "abA" (generators a..z, inverses A..Z) */
EK_API ek_status ek_group_word(const ek_group* group, const char* word,
                               double* out_matrix);

/* ---- limit sets ---- */

EK_API ek_status ek_limitset_compute(const ek_group* group, int max_len,
                                     double gap_min, double dedupe_radius,
                                     size_t budget, ek_limitset** out);
EK_API void ek_limitset_destroy(ek_limitset* ls);
EK_API ek_status ek_limitset_size(const ek_limitset* ls, size_t* out_size);
/* rep: n+2 coords; word buffer is NUL-terminated and truncated to word_cap;
 * out_t receives the universal lift time or NaN when not lifted */
EK_API ek_status ek_limitset_point(const ek_limitset* ls, size_t index,
                                   double* out_rep, double* out_gap,
                                   double* out_t, char* out_word,
                                   size_t word_cap);
EK_API ek_status ek_limitset_certify_negative(const ek_limitset* ls,
                                              int* out_negative,
                                              double* out_worst_value,
                                              size_t* out_worst_i,
                                              size_t* out_worst_j);
/* in-place acausal lift (sign + branch assignment) */
EK_API ek_status ek_limitset_lift(ek_limitset* ls);
EK_API ek_status ek_limitset_invariance_residual(const ek_limitset* ls,
                                                 const ek_group* group,
                                                 double* out_residual);
EK_API ek_status ek_limitset_save_csv(const ek_limitset* ls, const char* path);
EK_API ek_status ek_limitset_load_csv(const char* path, ek_limitset** out);

/* built-in fixtures: "cyclic", "schottky", "fuchsian", "join" with a JSON
 * parameter object (may be NULL or "{}") */
EK_API ek_status ek_fixture_limitset(const char* name, const char* params_json,
                                     ek_limitset** out, double* out_mesh);

/* ---- invisible domains ---- */

/* requires a lifted limit set */
EK_API ek_status ek_domain_create(const ek_limitset* ls, double mesh,
                                  ek_domain** out);
EK_API void ek_domain_destroy(ek_domain* domain);
EK_API ek_status ek_domain_dim(const ek_domain* domain, int* out_n);
/* x: unit vector of length n+1 on S^n */
EK_API ek_status ek_domain_envelopes(const ek_domain* domain, const double* x,
                                     double* out_fplus, double* out_fminus);
EK_API ek_status ek_domain_contains(const ek_domain* domain, const double* x,
                                    double t, int cross_check, int* out_inside);
EK_API ek_status ek_domain_classify(const ek_domain* domain, const double* x,
                                    double t, double horizon_band,
                                    ek_region_label* out_future,
                                    ek_region_label* out_past);
EK_API ek_status ek_domain_export_envelope_csv(const ek_domain* domain,
                                               int grid_count, unsigned long seed,
                                               const char* path);
EK_API ek_status ek_domain_export_region_csv(const ek_domain* domain,
                                             int probe_count, unsigned long seed,
                                             const char* path);
/* surface: 0 = f+, 1 = f-, 2 = future horizon (n = 2 only) */
EK_API ek_status ek_domain_export_obj(const ek_domain* domain, int surface,
                                      int resolution, const char* path);

/* ---- causal geodesic space ---- */

/* planes are given by two spanning vectors of length n+2 (any frame) */
EK_API ek_status ek_plane_classify(int n, const double* v1, const double* v2,
                                   ek_geodesic_class* out_class);
EK_API ek_status ek_delta_metric(int ambient_dim, const double* p1, const double* p2,
                                 const double* q1, const double* q2,
                                 double* out_delta);
EK_API ek_status ek_fiber_distance(int ambient_dim, const double* v1,
                                   const double* v2, const double* point,
                                   double* out_distance);
/* c_est = min over sampled configurations of delta(P,F_q)/delta(gP,gF_q) */
EK_API ek_status ek_expansion_probe(int n, const double* matrix, ek_basis basis,
                                    const double* pole, double radius, int trials,
                                    unsigned long seed, double* out_c_est);
/* photons of Ein(1,N): x, v unit orthogonal vectors of length N+1; the plane
 * frame is returned as two rows of length N+3 */
EK_API ek_status ek_photon_from_tangent(int sphere_dim, const double* x,
                                        const double* v, double* out_frame);
EK_API ek_status ek_photon_to_tangent(int sphere_dim, const double* frame,
                                      double* out_x, double* out_v);
/* geodesic trace through a domain; plane ambient must be n+2 for a domain
 * over S^n */
EK_API ek_status ek_intersect_domain(const ek_domain* domain, const double* v1,
                                     const double* v2, int samples, int* out_hits,
                                     double* out_t_enter, double* out_t_exit,
                                     int* out_runs);

/* ---- verification suites ---- */

/* suites: "fuchsian-diamond", "join", "schottky", "cyclic"; the JSON report
 * is heap-allocated, release with ek_string_free */
EK_API ek_status ek_verify(const char* suite, const char* params_json,
                           int* out_pass, char** out_report_json);

#ifdef __cplusplus
}
#endif

#endif /* EINKIT_H */
