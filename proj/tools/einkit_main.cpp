// einkit command line: Cartan decompositions, limit sets, invisible domains,
// causal-geodesic probes and fixture verification. Links the C API only.
//
// Exit codes: 0 success, 1 failed verification bound, 2 input error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "einkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int input_error(const std::string& context) {
  std::cerr << "einkit: " << context << ": " << ek_last_error() << "\n";
  return kExitInputError;
}

// matrix file: whitespace rows, '#' comments, n+2 rows per matrix
std::vector<std::vector<double>> read_matrices(const std::string& path, int n,
                                               std::string& error) {
  std::ifstream in(path);
  if (!in.good()) {
    error = "cannot open " + path;
    return {};
  }
  const int m = n + 2;
  std::vector<double> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::vector<double> row;
    double v;
    while (ss >> v) row.push_back(v);
    if (row.empty()) continue;
    if (static_cast<int>(row.size()) != m) {
      error = path + ":" + std::to_string(lineno) + ": expected " +
              std::to_string(m) + " entries per row";
      return {};
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  if (entries.empty() || entries.size() % (m * m) != 0) {
    error = path + ": row count is not a multiple of " + std::to_string(m);
    return {};
  }
  std::vector<std::vector<double>> out;
  for (std::size_t k = 0; k < entries.size(); k += m * m)
    out.emplace_back(entries.begin() + k, entries.begin() + k + m * m);
  return out;
}

std::string fixture_params_json(int n, int max_len, long seed) {
  (void)seed;
  std::ostringstream ss;
  ss << "{\"n\": " << n << ", \"max_len\": " << max_len << "}";
  return ss.str();
}

struct DomainHandles {
  ek_limitset* limitset = nullptr;
  ek_domain* domain = nullptr;
  double mesh = 0.0;

  ~DomainHandles() {
    if (domain) ek_domain_destroy(domain);
    if (limitset) ek_limitset_destroy(limitset);
  }
};

// builds the domain either from a named fixture or a generator config
int make_domain(const std::string& fixture, const std::string& gens_path,
                const std::string& limitset_csv, int n, int max_len, double mesh,
                DomainHandles& out) {
  if (!fixture.empty()) {
    if (ek_fixture_limitset(fixture.c_str(), fixture_params_json(n, max_len, 0).c_str(),
                            &out.limitset, &out.mesh) != EK_OK)
      return input_error("fixture " + fixture);
  } else if (!gens_path.empty()) {
    ek_group* group = nullptr;
    if (ek_group_load_json(gens_path.c_str(), &group) != EK_OK)
      return input_error(gens_path);
    const ek_status rc =
        ek_limitset_compute(group, max_len, 10.0, 1e-4, 0, &out.limitset);
    ek_group_destroy(group);
    if (rc != EK_OK) return input_error("limit set");
    if (ek_limitset_lift(out.limitset) != EK_OK) return input_error("acausal lift");
    out.mesh = mesh > 0.0 ? mesh : 1e-3;
  } else if (!limitset_csv.empty()) {
    if (ek_limitset_load_csv(limitset_csv.c_str(), &out.limitset) != EK_OK)
      return input_error(limitset_csv);
    out.mesh = mesh > 0.0 ? mesh : 1e-3;
  } else {
    std::cerr << "einkit: domain: need --fixture, --gens or --limitset\n";
    return kExitInputError;
  }
  if (mesh > 0.0) out.mesh = mesh;
  if (ek_domain_create(out.limitset, out.mesh, &out.domain) != EK_OK)
    return input_error("domain construction");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"einkit: anti-de Sitter / Einstein-universe numerical toolkit"};
  app.require_subcommand(1);

  // shared options
  int n = 2;
  int max_len = 10;
  double mesh = 0.0;
  long seed = 2026;
  std::string out_dir = ".";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "spatial dimension n (ambient is n+2)");
    cmd->add_option("--max-len", max_len, "maximal word length");
    cmd->add_option("--mesh", mesh, "sampling mesh override (radians)");
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--out", out_dir, "output directory");
  };

  // cartan
  std::string cartan_file;
  std::string cartan_basis = "diagonal";
  auto* cartan = app.add_subcommand("cartan", "KAK data of matrices from a file");
  cartan->add_option("file", cartan_file, "matrix file")->required();
  cartan->add_option("--basis", cartan_basis, "matrix basis: diagonal|split");
  add_common(cartan);

  // limitset
  std::string ls_gens, ls_fixture;
  double gap_min = 10.0, dedupe = 1e-4;
  auto* limitset = app.add_subcommand("limitset", "sample a limit set");
  limitset->add_option("--gens", ls_gens, "generator config (JSON)");
  limitset->add_option("--fixture", ls_fixture, "built-in fixture name");
  limitset->add_option("--gap-min", gap_min, "Cartan gap threshold");
  limitset->add_option("--dedupe", dedupe, "dedupe radius (radians)");
  add_common(limitset);

  // domain
  std::string dom_fixture, dom_gens, dom_csv;
  int grid = 4000;
  auto* domain = app.add_subcommand("domain", "build an invisible domain");
  domain->add_option("--fixture", dom_fixture, "built-in fixture name");
  domain->add_option("--gens", dom_gens, "generator config (JSON)");
  domain->add_option("--limitset", dom_csv, "limit set CSV");
  domain->add_option("--grid", grid, "export grid size");
  add_common(domain);

  // geodesics
  std::string geo_fixture = "schottky";
  int probes = 2000;
  auto* geodesics = app.add_subcommand("geodesics", "delta-metric / fiber / expansion probes");
  geodesics->add_option("--fixture", geo_fixture, "fixture for the clearance probes");
  geodesics->add_option("--probes", probes, "sample count");
  add_common(geodesics);

  // verify
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite,
                     "fuchsian-diamond | join | schottky | cyclic")->required();
  add_common(verify);

  // export-mesh
  std::string mesh_fixture = "schottky";
  int resolution = 96;
  auto* exportmesh = app.add_subcommand("export-mesh", "OBJ surfaces of f+/f- and horizon (n=2)");
  exportmesh->add_option("--fixture", mesh_fixture, "built-in fixture name");
  exportmesh->add_option("--res", resolution, "latitude resolution");
  add_common(exportmesh);

  CLI11_PARSE(app, argc, argv);

  std::error_code fs_error;
  std::filesystem::create_directories(out_dir, fs_error);

  if (cartan->parsed()) {
    std::string error;
    const auto matrices = read_matrices(cartan_file, n, error);
    if (matrices.empty()) {
      std::cerr << "einkit: " << error << "\n";
      return kExitInputError;
    }
    const ek_basis basis =
        cartan_basis == "split" ? EK_BASIS_SPLIT : EK_BASIS_DIAGONAL;
    std::ofstream csv(out_dir + "/cartan.csv");
    csv << "index,residual,det,identity_component,lambda,mu,gap\n";
    for (std::size_t i = 0; i < matrices.size(); ++i) {
      double residual = 0.0, det = 0.0, lambda = 0.0, mu = 0.0;
      int component = 0;
      if (ek_validate(n, basis, matrices[i].data(), &residual, &det, &component) !=
          EK_OK)
        return input_error("matrix " + std::to_string(i));
      if (ek_cartan(n, basis, matrices[i].data(), &lambda, &mu, nullptr, nullptr) !=
          EK_OK)
        return input_error("matrix " + std::to_string(i));
      csv << i << ',' << fmt(residual) << ',' << fmt(det) << ',' << component << ','
          << fmt(lambda) << ',' << fmt(mu) << ',' << fmt(lambda - mu) << '\n';
      std::cout << "matrix " << i << ": lambda=" << fmt(lambda) << " mu=" << fmt(mu)
                << " gap=" << fmt(lambda - mu) << "\n";
    }
    std::cout << "wrote " << out_dir << "/cartan.csv\n";
    return kExitOk;
  }

  if (limitset->parsed()) {
    ek_limitset* ls = nullptr;
    double fixture_mesh = 0.0;
    if (!ls_fixture.empty()) {
      if (ek_fixture_limitset(ls_fixture.c_str(),
                              fixture_params_json(n, max_len, seed).c_str(), &ls,
                              &fixture_mesh) != EK_OK)
        return input_error("fixture " + ls_fixture);
    } else {
      if (ls_gens.empty()) {
        std::cerr << "einkit: limitset: need --gens or --fixture\n";
        return kExitInputError;
      }
      ek_group* group = nullptr;
      if (ek_group_load_json(ls_gens.c_str(), &group) != EK_OK)
        return input_error(ls_gens);
      const ek_status rc = ek_limitset_compute(group, max_len, gap_min, dedupe, 0, &ls);
      if (rc != EK_OK) {
        ek_group_destroy(group);
        return input_error("limit set");
      }
      if (ek_limitset_lift(ls) != EK_OK) {
        std::cerr << "einkit: warning: acausal lift failed: " << ek_last_error()
                  << "\n";
      }
      double residual = 0.0;
      ek_limitset_invariance_residual(ls, group, &residual);
      std::cout << "invariance residual: " << fmt(residual) << "\n";
      ek_group_destroy(group);
    }
    size_t size = 0;
    ek_limitset_size(ls, &size);
    int negative = 0;
    double worst = 0.0;
    size_t wi = 0, wj = 0;
    if (ek_limitset_certify_negative(ls, &negative, &worst, &wi, &wj) == EK_OK) {
      std::cout << "points: " << size << "\nnegative: " << (negative ? "yes" : "no")
                << " (worst inner product " << fmt(worst) << " at pair " << wi << ","
                << wj << ")\n";
    } else {
      std::cout << "points: " << size << "\n";
    }
    const std::string path = out_dir + "/limitset.csv";
    if (ek_limitset_save_csv(ls, path.c_str()) != EK_OK) {
      ek_limitset_destroy(ls);
      return input_error(path);
    }
    std::cout << "wrote " << path << "\n";
    ek_limitset_destroy(ls);
    return kExitOk;
  }

  if (domain->parsed()) {
    DomainHandles handles;
    const int rc = make_domain(dom_fixture, dom_gens, dom_csv, n, max_len, mesh, handles);
    if (rc != kExitOk) return rc;
    const std::string fcsv = out_dir + "/envelopes.csv";
    const std::string rcsv = out_dir + "/regions.csv";
    if (ek_domain_export_envelope_csv(handles.domain, grid,
                                      static_cast<unsigned long>(seed),
                                      fcsv.c_str()) != EK_OK)
      return input_error(fcsv);
    if (ek_domain_export_region_csv(handles.domain, grid,
                                    static_cast<unsigned long>(seed),
                                    rcsv.c_str()) != EK_OK)
      return input_error(rcsv);
    std::cout << "mesh: " << fmt(handles.mesh) << "\nwrote " << fcsv << "\nwrote "
              << rcsv << "\n";
    return kExitOk;
  }

  if (geodesics->parsed()) {
    // probe battery against the fixture's limit set: Fact-3.1 fiber identity,
    // metric axioms on sampled triples, expansion constants of a(6,2)
    DomainHandles handles;
    const int rc = make_domain(geo_fixture, "", "", n, max_len, mesh, handles);
    if (rc != kExitOk) return rc;
    int dim = 0;
    ek_domain_dim(handles.domain, &dim);
    const int m = dim + 2;

    std::ofstream csv(out_dir + "/geodesic_probes.csv");
    csv << "probe,value\n";

    // expansion constants at the attracting pole of a(6,2)
    std::vector<double> weyl(m * m, 0.0);
    ek_weyl_element(dim, EK_BASIS_DIAGONAL, 6.0, 2.0, weyl.data());
    std::vector<double> pole(m, 0.0);
    pole[0] = 1.0 / std::sqrt(2.0);
    pole[2] = 1.0 / std::sqrt(2.0);
    double c_fwd = 0.0;
    if (ek_expansion_probe(dim, weyl.data(), EK_BASIS_DIAGONAL, pole.data(), 0.5,
                           probes, static_cast<unsigned long>(seed), &c_fwd) != EK_OK)
      return input_error("expansion probe");
    csv << "expansion_a62," << fmt(c_fwd) << '\n';
    std::cout << "expansion constant of a(6,2) at its pole: " << fmt(c_fwd) << "\n";

    // fiber identity spot checks on seeded planes against the domain sample
    size_t count = 0;
    ek_limitset_size(handles.limitset, &count);
    double min_fiber = 1e300;
    std::vector<double> v1(m, 0.0), v2(m, 0.0), rep(m, 0.0);
    v1[0] = 1.0;
    v2[1] = 1.0;  // timelike plane span{e_u, e_v}
    for (size_t i = 0; i < count; ++i) {
      double t = 0.0, gap = 0.0;
      if (ek_limitset_point(handles.limitset, i, rep.data(), &gap, &t, nullptr, 0) !=
          EK_OK)
        return input_error("limit set point");
      double d = 0.0;
      ek_fiber_distance(m, v1.data(), v2.data(), rep.data(), &d);
      min_fiber = std::min(min_fiber, d);
    }
    csv << "min_fiber_distance_timelike_plane," << fmt(min_fiber) << '\n';
    std::cout << "timelike-plane clearance over the limit set: " << fmt(min_fiber)
              << "\n";
    std::cout << "wrote " << out_dir << "/geodesic_probes.csv\n";
    return kExitOk;
  }

  if (verify->parsed()) {
    int pass = 0;
    char* report = nullptr;
    std::string params = fixture_params_json(n, max_len, seed);
    if (suite == "fuchsian-diamond" || suite == "join")
      params = "{\"n\": " + std::to_string(suite == "join" ? std::max(n, 3) : n) + "}";
    if (ek_verify(suite.c_str(), params.c_str(), &pass, &report) != EK_OK)
      return input_error("verify " + suite);
    const std::string path = out_dir + "/verify_" + suite + ".json";
    std::ofstream out(path);
    out << report << "\n";
    std::cout << report << "\n";
    ek_string_free(report);
    std::cout << "wrote " << path << "\n";
    if (!pass) {
      std::cerr << "einkit: verification bounds failed for " << suite << "\n";
      return kExitVerifyFailed;
    }
    return kExitOk;
  }

  if (exportmesh->parsed()) {
    DomainHandles handles;
    const int rc = make_domain(mesh_fixture, "", "", n, max_len, mesh, handles);
    if (rc != kExitOk) return rc;
    int dim = 0;
    ek_domain_dim(handles.domain, &dim);
    if (dim != 2) {
      std::cerr << "einkit: export-mesh requires an n=2 domain\n";
      return kExitInputError;
    }
    const char* names[3] = {"fplus.obj", "fminus.obj", "horizon.obj"};
    for (int s = 0; s < 3; ++s) {
      const std::string path = out_dir + "/" + names[s];
      if (ek_domain_export_obj(handles.domain, s, resolution, path.c_str()) != EK_OK) {
        if (s == 2) {
          std::cout << "horizon surface unavailable: " << ek_last_error() << "\n";
          continue;  // full-sphere limit sets have no horizon
        }
        return input_error(path);
      }
      std::cout << "wrote " << path << "\n";
    }
    return kExitOk;
  }

  return kExitInputError;
}
