#pragma once

#include "einkit/util.hpp"

namespace einkit {

// The two coordinate presentations of the signature-(2,n) form on R^{n+2}.
//
// Diagonal:  q(u,v,x_1..x_n) = -u^2 - v^2 + x_1^2 + ... + x_n^2
// Split:     q(x)            = x_1 x_{n+2} + x_2 x_{n+1} + x_3^2 + ... + x_n^2
//
// The split form has two hyperbolic pairs and n-2 positive squares, so its
// signature is (2,n). The associated bilinear form is fixed by polarization,
//   <u,v> = (q(u+v) - q(u) - q(v)) / 2,
// which puts 1/2 on the hyperbolic off-diagonal entries.
enum class Basis { Diagonal, Split };

struct Signature {
  int neg = 0;
  int pos = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

struct AmbientVector {
  Vector coords;
  Basis basis = Basis::Diagonal;

  int ambient_dim() const { return static_cast<int>(coords.size()); }
  // spatial dimension n, ambient is n+2
  int n() const { return ambient_dim() - 2; }
};

// Gram matrix J of <.,.> in the given basis, ambient dimension n+2.
Matrix gram_matrix(int n, Basis basis);

double inner_product(const AmbientVector& u, const AmbientVector& v);
double quad_form(const AmbientVector& u);

// Raw-coordinate versions used by the numeric kernels (basis fixed by caller).
double inner_product(const Vector& u, const Vector& v, Basis basis);
double quad_form(const Vector& u, Basis basis);

// Signature of <.,.> restricted to the span of the given vectors.
// The Gram matrix is normalized to unit spectral radius and eigenvalues
// within 1e-9 of zero count as zero; geodesic classification downstream
// depends on that band. Throws on linearly dependent input.
Signature restricted_signature(const std::vector<AmbientVector>& basis_vectors);
Signature restricted_signature(const std::vector<Vector>& vectors, Basis basis);

// Linear isometry intertwining the two forms: <T v, T w>_split = <v, w>_diag.
// Round trips are identity up to rounding.
AmbientVector change_basis(const AmbientVector& v, Basis to);

// Matrix of the diagonal->split identification (and its inverse).
Matrix basis_change_matrix(int n, Basis from, Basis to);

}  // namespace einkit
