#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace einkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  BasisMismatch,
  NotInGroup,
  AmbiguousPoles,
  NumericalFailure,
  BudgetExceeded,
  EmptySample,
  NotAcausal,
  NotNegative,
  InconsistentLift,
  OracleDisagreement,
  NotContained,
  EmptyBoundary,
  PingPongFailure,
  DegenerateSample,
  IoError,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

constexpr double kPi = 3.14159265358979323846;

// Geodesic distance on the round sphere; dot product clamped so antipodal
// pairs do not produce NaN.
inline double sphere_distance(const Vector& x, const Vector& y) {
  double c = x.dot(y);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Seeded RNG wrapper. All randomized routines take one of these so runs are
// reproducible from a single integer seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
  std::uint64_t integer(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  Vector gaussian_vector(int dim) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian();
    return v;
  }

  // Uniform point on S^{dim-1} embedded in R^dim.
  Vector sphere_point(int dim) {
    Vector v = gaussian_vector(dim);
    while (v.norm() < 1e-8) v = gaussian_vector(dim);
    return v / v.norm();
  }

  // Unit tangent vector at x (x unit).
  Vector unit_tangent(const Vector& x) {
    Vector v = gaussian_vector(static_cast<int>(x.size()));
    v -= v.dot(x) * x;
    while (v.norm() < 1e-8) {
      v = gaussian_vector(static_cast<int>(x.size()));
      v -= v.dot(x) * x;
    }
    return v / v.norm();
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Deterministic quasi-uniform grids on S^{d} (unit sphere of R^{d+1}).
// d = 1 is the uniform circle, d = 2 the Fibonacci sphere; higher d falls
// back to a seeded random cloud.
std::vector<Vector> sphere_grid(int sphere_dim, int count, std::uint64_t seed = 12345);

// Largest nearest-neighbour spacing of a grid (exact, O(N^2)); used to declare
// sampling meshes of analytic fixtures.
double grid_spacing(const std::vector<Vector>& points);

}  // namespace einkit
