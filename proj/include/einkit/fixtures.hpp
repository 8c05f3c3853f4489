#pragma once

#include <json.hpp>

#include "einkit/causal_geodesics.hpp"

namespace einkit {

// Built-in inputs with analytically known limit sets and domains, used by the
// verification suites and the CLI.
//
//   cyclic    <a(lambda,mu)>; limit set is exactly two points.
//   schottky  two hyperbolic isometries of H^2 with orthogonal axes,
//             embedded in O(2,2) fixing the first timelike direction;
//             ping-pong is checked numerically at build time. The limit set
//             is a Cantor set on the equator circle at universal time pi/2.
//   fuchsian  analytic round limit set S^{n-1} x {0} (cocompact-lattice
//             shape); no matrices.
//   join      analytic limit set S^p x {0} inside S^{n-1}; Lambda^+ is the
//             join of S^p and the dual sphere S^q, q = n-p-2.
enum class FixtureKind { CyclicProximal, SchottkyO12inO22, FuchsianLatticeSphere, JoinSpheres };

struct Fixture {
  FixtureKind kind = FixtureKind::FuchsianLatticeSphere;
  std::string name;
  int n = 2;
  std::optional<GroupPresentation> presentation;
  LimitSetSample sample;  // lifted
  double mesh = 0.0;
  int join_p = -1;        // JoinSpheres only
  nlohmann::json params;
};

struct CyclicParams {
  int n = 2;
  double lambda = 3.0;
  double mu = 1.0;
  int max_len = 6;
};

struct SchottkyParams {
  double separation = 2.0;  // translation length is 2 * separation
  int max_len = 10;
  double gap_min = 10.0;
  double dedupe_radius = 1e-4;
  std::size_t budget = kDefaultWordBudget;
};

struct FuchsianParams {
  int n = 2;
  int equator_count = 512;
};

struct JoinParams {
  int n = 3;
  int p = 1;
  int count = 256;
};

Fixture build_cyclic(const CyclicParams& params);
Fixture build_schottky(const SchottkyParams& params);
Fixture build_fuchsian(const FuchsianParams& params);
Fixture build_join(const JoinParams& params);

// Dispatch by name ("cyclic", "schottky", "fuchsian", "join") with JSON
// parameter overrides matching the structs above.
Fixture build_fixture(const std::string& name, const nlohmann::json& params);

InvisibleDomain::Options domain_options(const Fixture& fixture);
InvisibleDomain build_domain(const Fixture& fixture);

struct Report {
  bool pass = false;
  nlohmann::json data;
};

// Diamond description of the round-sphere domain: f+ equals
// pi/2 - d_0(x, pole) on each hemisphere and membership matches
// I^-(pole, +pi/2) cap I^+(pole, -pi/2) outside the mesh band.
Report check_diamond(const Fixture& fixture, int grid_count = 10000,
                     std::uint64_t seed = 7);

// Join description: the Lambda^+ graph is the distance to S^p, equals pi/2
// along S^q, and the future-core domain agrees with the dual cone generated
// by S^p and S^q samples.
Report check_join(const Fixture& fixture, int grid_count = 4000,
                  std::uint64_t seed = 7);

// Word-by-word return counts of a small ball under the group action together
// with orbit acausality violations.
Report properness_probe(const Fixture& fixture, int probe_count = 100,
                        int max_len = 8, std::uint64_t seed = 7);

// Envelope-vs-dual-cone agreement on random probes (disagreements must sit
// inside the 2*mesh boundary band and stay rare).
Report dual_cone_agreement(const Fixture& fixture, int probe_count = 10000,
                           std::uint64_t seed = 7);

// Future-side labels partition the contained probes of the E1 hemisphere.
Report region_partition(const Fixture& fixture, int probe_count = 10000,
                        std::uint64_t seed = 7);

// Named suites used by the CLI: "fuchsian-diamond", "join", "schottky",
// "cyclic".
Report verify_suite(const std::string& name, const nlohmann::json& params);

}  // namespace einkit
