#include "einkit/util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace einkit {

std::vector<Vector> sphere_grid(int sphere_dim, int count, std::uint64_t seed) {
  require(sphere_dim >= 1, ErrorCode::InvalidArgument, "sphere_grid: dim >= 1");
  require(count >= 1, ErrorCode::InvalidArgument, "sphere_grid: count >= 1");
  std::vector<Vector> out;
  out.reserve(count);
  if (sphere_dim == 1) {
    for (int i = 0; i < count; ++i) {
      const double a = 2.0 * kPi * i / count;
      Vector v(2);
      v << std::cos(a), std::sin(a);
      out.push_back(v);
    }
    return out;
  }
  if (sphere_dim == 2) {
    // Fibonacci sphere
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * i;
      Vector v(3);
      v << r * std::cos(a), r * std::sin(a), z;
      out.push_back(v);
    }
    return out;
  }
  Rng rng(seed);
  for (int i = 0; i < count; ++i) out.push_back(rng.sphere_point(sphere_dim + 1));
  return out;
}

double grid_spacing(const std::vector<Vector>& points) {
  require(points.size() >= 2, ErrorCode::InvalidArgument, "grid_spacing: >= 2 points");
  double worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      nearest = std::min(nearest, sphere_distance(points[i], points[j]));
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace einkit
