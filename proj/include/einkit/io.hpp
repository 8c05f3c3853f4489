#pragma once

#include <json.hpp>
#include <ostream>

#include "einkit/fixtures.hpp"

namespace einkit {

// File formats are plain UTF-8 text. Matrix files: one whitespace-separated
// row per line, `#` starts a comment, blank lines ignored, each matrix is
// n+2 consecutive rows. Generator configs are JSON:
//   {"n": 2, "basis": "diagonal"|"split",
//    "generators": [[(n+2)^2 row-major reals], ...],
//    "relation_hint": "free"|"unknown"}
// CSV files carry a header line; floats print with %.17g so runs with equal
// seeds are byte-identical.

std::string format_double(double v);

std::vector<Matrix> parse_matrix_file(const std::string& path, int n);

GroupPresentation load_generators_json(const std::string& path);

void save_limit_set_csv(const LimitSetSample& S, const std::string& path);
LimitSetSample load_limit_set_csv(const std::string& path);

// point table: model,c0,c1,...
void save_point_table_csv(const std::vector<KleinPoint>& points,
                          const std::string& path);

// x0..xn,fplus,fminus over a sphere grid
void save_envelope_grid_csv(const InvisibleDomain& D, int grid_count,
                            std::uint64_t seed, const std::string& path);

// x0..xn,t,future_label,past_label over random probes in the slab
void save_region_grid_csv(const InvisibleDomain& D, int probe_count,
                          std::uint64_t seed, const std::string& path);

// OBJ surfaces for n = 2: the f+ / f- graphs and the future-horizon
// candidate surface over latitude-longitude grids of S^2, embedded radially
// as (1 + t / (2*pi)) * x.
enum class MeshSurface { FPlus, FMinus, FutureHorizon };
void export_surface_obj(const InvisibleDomain& D, MeshSurface surface,
                        int resolution, const std::string& path);

void write_json(const nlohmann::json& data, const std::string& path);

}  // namespace einkit
