#include "einkit/group.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace einkit {

GroupElement validate(const Matrix& matrix, Basis basis, double tolerance) {
  require(matrix.rows() == matrix.cols(), ErrorCode::InvalidArgument,
          "validate: matrix must be square");
  const int m = static_cast<int>(matrix.rows());
  require(m >= 4, ErrorCode::InvalidArgument, "validate: ambient dimension >= 4");

  const Matrix J = gram_matrix(m - 2, basis);
  const double residual = (matrix.transpose() * J * matrix - J).norm() / J.norm();
  if (residual > tolerance)
    fail(ErrorCode::NotInGroup,
         "matrix does not preserve the form: residual " + std::to_string(residual));

  const double det = matrix.determinant();
  if (std::abs(std::abs(det) - 1.0) > tolerance)
    fail(ErrorCode::NotInGroup, "determinant not +-1: " + std::to_string(det));

  return GroupElement{matrix, basis, residual, det};
}

GroupElement group_inverse(const GroupElement& g) {
  const Matrix J = gram_matrix(g.n(), g.basis);
  // J^{-1} g^T J; in the diagonal basis J is its own inverse.
  Matrix inv = J.inverse() * g.matrix.transpose() * J;
  return GroupElement{inv, g.basis, g.form_residual, g.det};
}

GroupElement group_product(const GroupElement& a, const GroupElement& b) {
  require(a.basis == b.basis, ErrorCode::BasisMismatch, "product: basis mismatch");
  require(a.ambient_dim() == b.ambient_dim(), ErrorCode::DimensionMismatch,
          "product: dimension mismatch");
  return GroupElement{a.matrix * b.matrix, a.basis, a.form_residual + b.form_residual,
                      a.det * b.det};
}

GroupElement weyl_element(int n, double lambda, double mu, Basis basis) {
  require(n >= 2, ErrorCode::InvalidArgument, "weyl_element: n >= 2");
  const int m = n + 2;
  if (basis == Basis::Split) {
    Matrix a = Matrix::Identity(m, m);
    a(0, 0) = std::exp(lambda);
    a(1, 1) = std::exp(mu);
    a(m - 2, m - 2) = std::exp(-mu);
    a(m - 1, m - 1) = std::exp(-lambda);
    return GroupElement{a, Basis::Split, 0.0, 1.0};
  }
  // diagonal basis: commuting boosts in the (u,x1) and (v,x2) planes
  Matrix a = Matrix::Identity(m, m);
  a(0, 0) = std::cosh(lambda);
  a(0, 2) = std::sinh(lambda);
  a(2, 0) = std::sinh(lambda);
  a(2, 2) = std::cosh(lambda);
  a(1, 1) = std::cosh(mu);
  a(1, 3) = std::sinh(mu);
  a(3, 1) = std::sinh(mu);
  a(3, 3) = std::cosh(mu);
  return GroupElement{a, Basis::Diagonal, 0.0, 1.0};
}

namespace {

GroupElement to_diagonal(const GroupElement& g) {
  if (g.basis == Basis::Diagonal) return g;
  const Matrix T = basis_change_matrix(g.n(), Basis::Split, Basis::Diagonal);
  const Matrix Ti = basis_change_matrix(g.n(), Basis::Diagonal, Basis::Split);
  return GroupElement{T * g.matrix * Ti, Basis::Diagonal, g.form_residual, g.det};
}

// Orthogonal polar factor of g via SVD; block diagonal O(2) x O(n) because it
// is both Euclidean-orthogonal and form-preserving.
Matrix polar_orthogonal(const Matrix& g) {
  Eigen::JacobiSVD<Matrix> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().transpose();
}

}  // namespace

CartanFactors cartan_decompose(const GroupElement& g_in) {
  const GroupElement g = to_diagonal(g_in);
  const int m = g.ambient_dim();
  const int n = m - 2;

  Eigen::JacobiSVD<Matrix> svd(g.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector sigma = svd.singularValues();
  require(sigma[m - 1] > 0.0, ErrorCode::NumericalFailure,
          "cartan_decompose: singular input");

  // s = V log(Sigma) V^T is the symmetric-space part; for a form-preserving g
  // it has the shape [[0, B], [B^T, 0]] with B 2 x n.
  Matrix logs = Matrix::Zero(m, m);
  {
    Matrix V = svd.matrixV();
    Vector logsig(m);
    for (int i = 0; i < m; ++i) logsig[i] = std::log(sigma[i]);
    logs = V * logsig.asDiagonal() * V.transpose();
  }
  const double diag_block_residual =
      logs.topLeftCorner(2, 2).norm() + logs.bottomRightCorner(n, n).norm();
  if (diag_block_residual > 1e-6 * (1.0 + logs.norm()))
    fail(ErrorCode::NumericalFailure,
         "cartan_decompose: reciprocal eigenvalue pairing failed");

  const Matrix B = logs.block(0, 2, 2, n);
  Eigen::JacobiSVD<Matrix> bsvd(B, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double lambda = bsvd.singularValues()[0];
  const double mu = bsvd.singularValues()[1];

  Matrix k1 = Matrix::Identity(m, m);
  k1.topLeftCorner(2, 2) = bsvd.matrixU();
  k1.bottomRightCorner(n, n) = bsvd.matrixV();

  const Matrix kp = svd.matrixU() * svd.matrixV().transpose();

  CartanFactors out;
  out.lambda = lambda;
  out.mu = mu;
  out.k = GroupElement{kp * k1, Basis::Diagonal, g.form_residual, 0.0};
  out.l = GroupElement{k1.transpose(), Basis::Diagonal, g.form_residual, 0.0};
  out.k.det = out.k.matrix.determinant();
  out.l.det = out.l.matrix.determinant();
  return out;
}

bool is_identity_component(const GroupElement& g_in) {
  const GroupElement g = to_diagonal(g_in);
  if (g.det < 0.0) return false;
  const Matrix kp = polar_orthogonal(g.matrix);
  return kp.topLeftCorner(2, 2).determinant() > 0.0;
}

ProjectivePoint ProjectivePoint::from_vector(const Vector& v) {
  const double norm = v.norm();
  require(norm > 1e-300, ErrorCode::InvalidArgument, "projective point from zero vector");
  Vector rep = v / norm;
  for (int i = 0; i < rep.size(); ++i) {
    if (std::abs(rep[i]) > 1e-12) {
      if (rep[i] < 0.0) rep = -rep;
      break;
    }
  }
  return ProjectivePoint{rep};
}

double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  require(p.rep.size() == q.rep.size(), ErrorCode::DimensionMismatch,
          "projective_distance: dimension mismatch");
  return std::acos(clamp01(std::abs(p.rep.dot(q.rep))));
}

ProjectivePoint act_projective(const GroupElement& g, const ProjectivePoint& p) {
  require(g.ambient_dim() == p.rep.size(), ErrorCode::DimensionMismatch,
          "act_projective: dimension mismatch");
  return ProjectivePoint::from_vector(g.matrix * p.rep);
}

P1Data p1_data(const GroupElement& g_in) {
  const GroupElement g = to_diagonal(g_in);
  const int m = g.ambient_dim();
  CartanFactors f = cartan_decompose(g);
  if (f.gap() <= 1e-9)
    fail(ErrorCode::AmbiguousPoles,
         "p1_data: Cartan gap below tolerance, poles are not determined");

  // split e_1 and e_{n+2} expressed in diagonal coordinates
  Vector wplus = Vector::Zero(m);
  wplus[0] = 1.0;
  wplus[2] = 1.0;
  Vector wminus = Vector::Zero(m);
  wminus[0] = 1.0;
  wminus[2] = -1.0;

  // poles are reported in diagonal coordinates regardless of g's basis
  P1Data out;
  out.gap = f.gap();
  out.p_plus = ProjectivePoint::from_vector(f.k.matrix * wplus);
  out.p_minus = ProjectivePoint::from_vector(f.l.matrix.transpose() * wminus);
  return out;
}

bool attracting_line(const GroupElement& g, ProjectivePoint& out, int max_squarings) {
  Matrix B = g.matrix / g.matrix.norm();
  for (int k = 0; k < max_squarings; ++k) {
    B = B * B;
    const double norm = B.norm();
    if (!(norm > 1e-300) || !std::isfinite(norm)) return false;
    B /= norm;
  }
  // dominant column, then two power steps to settle the direction
  Eigen::Index best = 0;
  B.colwise().norm().maxCoeff(&best);
  Vector v = B.col(best);
  if (v.norm() < 1e-12) return false;
  v.normalize();
  for (int it = 0; it < 2; ++it) {
    Vector w = B * v;
    if (w.norm() < 1e-12) return false;
    v = w.normalized();
  }
  const Vector image = (B * v).normalized();
  const double settled = std::min((image - v).norm(), (image + v).norm());
  if (settled > 1e-10) {
    // squaring stalled (no real spectral gap): dense eigensolve fallback
    Eigen::EigenSolver<Matrix> es(g.matrix);
    const auto& vals = es.eigenvalues();
    int top = 0;
    double top_mod = 0.0;
    for (int i = 0; i < vals.size(); ++i) {
      if (std::abs(vals[i]) > top_mod) {
        top_mod = std::abs(vals[i]);
        top = i;
      }
    }
    if (std::abs(vals[top].imag()) > 1e-9 * top_mod) return false;
    double second = 0.0;
    for (int i = 0; i < vals.size(); ++i)
      if (i != top) second = std::max(second, std::abs(vals[i]));
    if (top_mod - second <= 1e-9 * top_mod) return false;
    Vector ev = es.eigenvectors().col(top).real();
    if (ev.norm() < 1e-12) return false;
    out = ProjectivePoint::from_vector(ev);
    return true;
  }
  out = ProjectivePoint::from_vector(v);
  return true;
}

GroupElement random_compact(int n, Rng& rng) {
  const int m = n + 2;
  auto haar_so = [&rng](int d) {
    Matrix A(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) A(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Matrix> qr(A);
    Matrix Q = qr.householderQ();
    // fix signs so R has positive diagonal, then force det +1
    Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i)
      if (R(i, i) < 0.0) Q.col(i) = -Q.col(i);
    if (Q.determinant() < 0.0) Q.col(0) = -Q.col(0);
    return Q;
  };
  Matrix k = Matrix::Zero(m, m);
  k.topLeftCorner(2, 2) = haar_so(2);
  k.bottomRightCorner(n, n) = haar_so(n);
  return GroupElement{k, Basis::Diagonal, 0.0, 1.0};
}

GroupElement random_identity_component(int n, Rng& rng, double max_lambda) {
  const double lambda = rng.uniform(0.0, max_lambda);
  const double mu = rng.uniform(0.0, lambda);
  GroupElement k = random_compact(n, rng);
  GroupElement l = random_compact(n, rng);
  GroupElement a = weyl_element(n, lambda, mu);
  return validate(k.matrix * a.matrix * l.matrix, Basis::Diagonal, 1e-8);
}

}  // namespace einkit
