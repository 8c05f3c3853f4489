#pragma once

#include "einkit/forms.hpp"

namespace einkit {

// A validated element of O(2,n) in a fixed coordinate basis.
// Invariant: ||g^T J g - J|| <= 1e-9 ||J|| and |det g| = 1 up to 1e-9.
struct GroupElement {
  Matrix matrix;
  Basis basis = Basis::Diagonal;
  double form_residual = 0.0;
  double det = 1.0;

  int ambient_dim() const { return static_cast<int>(matrix.rows()); }
  int n() const { return ambient_dim() - 2; }
};

constexpr double kGroupTolerance = 1e-9;

// Checks the form residual and determinant; throws NotInGroup otherwise.
GroupElement validate(const Matrix& matrix, Basis basis,
                      double tolerance = kGroupTolerance);

// Exact inverse inside the group: g^{-1} = J^{-1} g^T J.
GroupElement group_inverse(const GroupElement& g);

GroupElement group_product(const GroupElement& a, const GroupElement& b);

// Weyl chamber element a(lambda,mu): diag(e^l, e^m, 1..1, e^-m, e^-l) in the
// split basis; a pair of commuting boosts in the diagonal basis.
GroupElement weyl_element(int n, double lambda, double mu,
                          Basis basis = Basis::Diagonal);

// Cartan factors of g = k a l with k,l in O(2) x O(n) (diagonal basis) and
// lambda >= mu >= 0 unique.
struct CartanFactors {
  GroupElement k;
  double lambda = 0.0;
  double mu = 0.0;
  GroupElement l;

  double gap() const { return lambda - mu; }
};

// KAK decomposition. Computed in the diagonal basis from one SVD of g
// (polar part and principal exponents come out of the same factorization;
// no squaring of the condition number). Valid on every component of the
// group: the K factors land in O(2) x O(n), not necessarily SO.
CartanFactors cartan_decompose(const GroupElement& g);

// det g = +1 and the O(2) block of the polar orthogonal factor preserves
// orientation: exactly the orientation + time-orientation preserving classes.
bool is_identity_component(const GroupElement& g);

// A point of the projective space P(R^{n+2}), stored as a Euclidean unit
// vector with the first coordinate above 1e-12 in absolute value made
// positive. The metric is the angle between lines, in [0, pi/2].
struct ProjectivePoint {
  Vector rep;

  static ProjectivePoint from_vector(const Vector& v);
};

double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q);

ProjectivePoint act_projective(const GroupElement& g, const ProjectivePoint& p);

// Attracting/repelling data of the Cartan decomposition:
// gap = lambda - mu, p+ = k [e_1], p- = l^{-1} [e_{n+2}] (split-basis poles,
// returned in the coordinates of g's basis). Both lie on the null cone.
// Throws AmbiguousPoles when the gap is below 1e-9.
struct P1Data {
  double gap = 0.0;
  ProjectivePoint p_plus;
  ProjectivePoint p_minus;
};

P1Data p1_data(const GroupElement& g);

// Dominant projective fixed line of g, extracted by renormalized repeated
// squaring (at most `max_squarings` doublings) with a dense eigensolve
// fallback. Returns false when g has no real dominant eigenline.
bool attracting_line(const GroupElement& g, ProjectivePoint& out,
                     int max_squarings = 6);

// Seeded generators used by tests, probes and fixtures.
GroupElement random_compact(int n, Rng& rng);         // element of SO(2) x SO(n)
GroupElement random_identity_component(int n, Rng& rng, double max_lambda = 5.0);

}  // namespace einkit
