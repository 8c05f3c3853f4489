#include "einkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace einkit {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  require(out.good(), ErrorCode::IoError, "cannot open for writing: " + path);
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

std::vector<Matrix> parse_matrix_file(const std::string& path, int n) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::IoError, "cannot open matrix file: " + path);
  const int m = n + 2;

  std::vector<Vector> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::vector<double> values;
    double v;
    while (ss >> v) values.push_back(v);
    if (values.empty()) continue;
    require(static_cast<int>(values.size()) == m, ErrorCode::ParseError,
            path + ":" + std::to_string(lineno) + ": expected " +
                std::to_string(m) + " entries per row");
    rows.push_back(Eigen::Map<Vector>(values.data(), m));
  }
  require(!rows.empty() && rows.size() % m == 0, ErrorCode::ParseError,
          path + ": row count is not a multiple of " + std::to_string(m));

  std::vector<Matrix> out;
  for (std::size_t k = 0; k < rows.size(); k += m) {
    Matrix g(m, m);
    for (int i = 0; i < m; ++i) g.row(i) = rows[k + i].transpose();
    out.push_back(g);
  }
  return out;
}

GroupPresentation load_generators_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::IoError, "cannot open generator config: " + path);
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  require(config.contains("n") && config.contains("generators"),
          ErrorCode::ParseError, path + ": needs fields 'n' and 'generators'");
  const int n = config.at("n").get<int>();
  const int m = n + 2;
  Basis basis = Basis::Diagonal;
  if (config.contains("basis")) {
    const std::string tag = config.at("basis").get<std::string>();
    require(tag == "diagonal" || tag == "split", ErrorCode::ParseError,
            path + ": basis must be 'diagonal' or 'split'");
    basis = tag == "split" ? Basis::Split : Basis::Diagonal;
  }
  RelationHint hint = RelationHint::Free;
  if (config.contains("relation_hint")) {
    const std::string tag = config.at("relation_hint").get<std::string>();
    require(tag == "free" || tag == "unknown", ErrorCode::ParseError,
            path + ": relation_hint must be 'free' or 'unknown'");
    hint = tag == "unknown" ? RelationHint::Unknown : RelationHint::Free;
  }
  std::vector<GroupElement> gens;
  for (const auto& entry : config.at("generators")) {
    require(entry.is_array() && static_cast<int>(entry.size()) == m * m,
            ErrorCode::ParseError,
            path + ": each generator needs (n+2)^2 row-major entries");
    Matrix g(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) = entry.at(i * m + j).get<double>();
    gens.push_back(validate(g, basis));
  }
  return make_presentation(std::move(gens), hint);
}

void save_limit_set_csv(const LimitSetSample& S, const std::string& path) {
  auto out = open_out(path);
  const int m = S.n + 2;
  out << "word,gap";
  for (int i = 0; i < m; ++i) out << ",c" << i;
  out << ",t\n";
  for (std::size_t i = 0; i < S.points.size(); ++i) {
    const auto& p = S.points[i];
    out << p.word << ',' << format_double(p.gap);
    for (int j = 0; j < m; ++j) out << ',' << format_double(p.point.rep[j]);
    if (S.lift)
      out << ',' << format_double((*S.lift)[i].t);
    else
      out << ',';
    out << '\n';
  }
}

LimitSetSample load_limit_set_csv(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::IoError, "cannot open limit set csv: " + path);
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), ErrorCode::ParseError,
          path + ": empty file");
  const auto head_fields = split_csv_line(header);
  require(head_fields.size() >= 4 && head_fields[0] == "word", ErrorCode::ParseError,
          path + ": not a limit set csv");
  const int m = static_cast<int>(head_fields.size()) - 3;

  LimitSetSample S;
  S.n = m - 2;
  std::vector<UniversalPoint> lift;
  bool lifted = true;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    require(static_cast<int>(fields.size()) >= m + 2, ErrorCode::ParseError,
            path + ": short row");
    Vector rep(m);
    for (int j = 0; j < m; ++j) rep[j] = std::stod(fields[2 + j]);
    const KleinPoint kp = make_ein_klein(rep, 1e-6);
    S.points.push_back(LimitPoint{kp, fields[0], std::stod(fields[1])});
    if (static_cast<int>(fields.size()) > m + 2 && !fields[m + 2].empty()) {
      const double t = std::stod(fields[m + 2]);
      const ConformalPoint c = klein_to_conformal(kp);
      lift.push_back(UniversalPoint{c.x, t});
    } else {
      lifted = false;
    }
  }
  require(!S.points.empty(), ErrorCode::EmptySample, path + ": no points");
  if (lifted) S.lift = std::move(lift);
  return S;
}

void save_point_table_csv(const std::vector<KleinPoint>& points,
                          const std::string& path) {
  auto out = open_out(path);
  int m = points.empty() ? 0 : points.front().ambient_dim();
  out << "model";
  for (int i = 0; i < m; ++i) out << ",c" << i;
  out << '\n';
  for (const auto& p : points) {
    out << (p.tag == SpaceTag::Ein ? "ein" : "ads");
    for (int i = 0; i < m; ++i) out << ',' << format_double(p.rep[i]);
    out << '\n';
  }
}

void save_envelope_grid_csv(const InvisibleDomain& D, int grid_count,
                            std::uint64_t seed, const std::string& path) {
  auto out = open_out(path);
  const int n = D.n();
  for (int i = 0; i <= n; ++i) out << 'x' << i << ',';
  out << "fplus,fminus\n";
  for (const auto& x : sphere_grid(n, grid_count, seed)) {
    for (int i = 0; i <= n; ++i) out << format_double(x[i]) << ',';
    out << format_double(D.f_plus(x)) << ',' << format_double(D.f_minus(x)) << '\n';
  }
}

void save_region_grid_csv(const InvisibleDomain& D, int probe_count,
                          std::uint64_t seed, const std::string& path) {
  auto out = open_out(path);
  const int n = D.n();
  Rng rng(seed);
  for (int i = 0; i <= n; ++i) out << 'x' << i << ',';
  out << "t,future_label,past_label\n";
  for (int k = 0; k < probe_count; ++k) {
    const Vector x = rng.sphere_point(n + 1);
    const double t = D.slab_center() + rng.uniform(-0.5 * kPi, 0.5 * kPi);
    RegionClassification c;
    try {
      c = D.classify_region(UniversalPoint{x, t});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyBoundary) throw;
      // full-sphere limit sets only carry core labels
      const bool inside = D.contains(UniversalPoint{x, t});
      c.future_side = inside ? RegionLabel::FutureCore : RegionLabel::OutsideOmega;
      c.past_side = inside ? RegionLabel::PastCore : RegionLabel::OutsideOmega;
    }
    for (int i = 0; i <= n; ++i) out << format_double(x[i]) << ',';
    out << format_double(t) << ',' << region_label_name(c.future_side) << ','
        << region_label_name(c.past_side) << '\n';
  }
}

void export_surface_obj(const InvisibleDomain& D, MeshSurface surface,
                        int resolution, const std::string& path) {
  require(D.n() == 2, ErrorCode::InvalidArgument,
          "export_surface_obj: only n = 2 domains have S^2 graph surfaces");
  require(resolution >= 8, ErrorCode::InvalidArgument,
          "export_surface_obj: resolution >= 8");
  auto out = open_out(path);
  out << "# einkit surface export\n";

  const int rows = resolution;       // latitude bands
  const int cols = 2 * resolution;   // longitude
  auto height = [&](const Vector& x) {
    switch (surface) {
      case MeshSurface::FPlus: return D.f_plus(x);
      case MeshSurface::FMinus: return D.f_minus(x);
      case MeshSurface::FutureHorizon: return D.future_horizon_height(x);
    }
    return 0.0;
  };

  for (int i = 0; i <= rows; ++i) {
    const double phi = kPi * i / rows;  // colatitude
    for (int j = 0; j < cols; ++j) {
      const double lon = 2.0 * kPi * j / cols;
      Vector x(3);
      x << std::sin(phi) * std::cos(lon), std::sin(phi) * std::sin(lon),
          std::cos(phi);
      const double t = height(x);
      const double r = 1.0 + t / (2.0 * kPi);
      out << "v " << format_double(r * x[0]) << ' ' << format_double(r * x[1]) << ' '
          << format_double(r * x[2]) << '\n';
    }
  }
  auto vid = [cols](int i, int j) { return i * cols + (j % cols) + 1; };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      out << "f " << vid(i, j) << ' ' << vid(i + 1, j) << ' ' << vid(i + 1, j + 1)
          << '\n';
      out << "f " << vid(i, j) << ' ' << vid(i + 1, j + 1) << ' ' << vid(i, j + 1)
          << '\n';
    }
  }
}

void write_json(const nlohmann::json& data, const std::string& path) {
  auto out = open_out(path);
  out << data.dump(2) << '\n';
}

}  // namespace einkit
