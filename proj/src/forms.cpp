#include "einkit/forms.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace einkit {

Matrix gram_matrix(int n, Basis basis) {
  require(n >= 2, ErrorCode::InvalidArgument, "spatial dimension must be >= 2");
  const int m = n + 2;
  Matrix J = Matrix::Zero(m, m);
  if (basis == Basis::Diagonal) {
    J(0, 0) = -1.0;
    J(1, 1) = -1.0;
    for (int i = 2; i < m; ++i) J(i, i) = 1.0;
  } else {
    J(0, m - 1) = 0.5;
    J(m - 1, 0) = 0.5;
    J(1, m - 2) = 0.5;
    J(m - 2, 1) = 0.5;
    for (int i = 2; i < m - 2; ++i) J(i, i) = 1.0;
  }
  return J;
}

double inner_product(const Vector& u, const Vector& v, Basis basis) {
  require(u.size() == v.size(), ErrorCode::DimensionMismatch,
          "inner_product: dimension mismatch");
  const int m = static_cast<int>(u.size());
  require(m >= 4, ErrorCode::InvalidArgument, "ambient dimension must be >= 4");
  if (basis == Basis::Diagonal) {
    double s = -u[0] * v[0] - u[1] * v[1];
    for (int i = 2; i < m; ++i) s += u[i] * v[i];
    return s;
  }
  double s = 0.5 * (u[0] * v[m - 1] + u[m - 1] * v[0]) +
             0.5 * (u[1] * v[m - 2] + u[m - 2] * v[1]);
  for (int i = 2; i < m - 2; ++i) s += u[i] * v[i];
  return s;
}

double quad_form(const Vector& u, Basis basis) { return inner_product(u, u, basis); }

double inner_product(const AmbientVector& u, const AmbientVector& v) {
  require(u.basis == v.basis, ErrorCode::BasisMismatch,
          "inner_product: operands use different bases");
  return inner_product(u.coords, v.coords, u.basis);
}

double quad_form(const AmbientVector& u) { return inner_product(u, u); }

Signature restricted_signature(const std::vector<Vector>& vectors, Basis basis) {
  require(!vectors.empty(), ErrorCode::InvalidArgument, "empty span");
  const int m = static_cast<int>(vectors.front().size());
  const int k = static_cast<int>(vectors.size());
  Matrix A(m, k);
  for (int j = 0; j < k; ++j) {
    require(vectors[j].size() == m, ErrorCode::DimensionMismatch,
            "restricted_signature: mixed dimensions");
    A.col(j) = vectors[j];
  }

  // rank check on the input span
  Eigen::JacobiSVD<Matrix> svd(A);
  const double smax = svd.singularValues()[0];
  require(smax > 0 && svd.singularValues()[k - 1] > 1e-9 * smax,
          ErrorCode::InvalidArgument,
          "restricted_signature: input vectors are linearly dependent");

  Matrix G(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      G(i, j) = inner_product(vectors[i], vectors[j], basis);

  Eigen::SelfAdjointEigenSolver<Matrix> es(G);
  Vector ev = es.eigenvalues();
  double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0) scale = 1.0;

  Signature sig;
  for (int i = 0; i < k; ++i) {
    const double lam = ev[i] / scale;
    if (std::abs(lam) <= 1e-9)
      ++sig.zero;
    else if (lam < 0.0)
      ++sig.neg;
    else
      ++sig.pos;
  }
  return sig;
}

Signature restricted_signature(const std::vector<AmbientVector>& basis_vectors) {
  require(!basis_vectors.empty(), ErrorCode::InvalidArgument, "empty span");
  const Basis basis = basis_vectors.front().basis;
  std::vector<Vector> raw;
  raw.reserve(basis_vectors.size());
  for (const auto& v : basis_vectors) {
    require(v.basis == basis, ErrorCode::BasisMismatch,
            "restricted_signature: mixed bases");
    raw.push_back(v.coords);
  }
  return restricted_signature(raw, basis);
}

Matrix basis_change_matrix(int n, Basis from, Basis to) {
  const int m = n + 2;
  if (from == to) return Matrix::Identity(m, m);
  // Columns of T are the split coordinates of the diagonal basis vectors:
  // the two timelike axes map to e_1 - e_{n+2} and e_2 - e_{n+1}, the first
  // two spacelike axes to e_1 + e_{n+2} and e_2 + e_{n+1}, the rest shift.
  Matrix T = Matrix::Zero(m, m);
  T(0, 0) = 1.0;
  T(m - 1, 0) = -1.0;
  T(1, 1) = 1.0;
  T(m - 2, 1) = -1.0;
  T(0, 2) = 1.0;
  T(m - 1, 2) = 1.0;
  T(1, 3) = 1.0;
  T(m - 2, 3) = 1.0;
  for (int j = 4; j < m; ++j) T(j - 2, j) = 1.0;
  if (from == Basis::Diagonal) return T;
  return T.inverse();
}

AmbientVector change_basis(const AmbientVector& v, Basis to) {
  if (v.basis == to) return v;
  const Matrix T = basis_change_matrix(v.n(), v.basis, to);
  return AmbientVector{T * v.coords, to};
}

}  // namespace einkit
