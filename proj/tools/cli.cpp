#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "output.hpp"
#include "pdm/error.hpp"
#include "pdm/masstransform.hpp"
#include "pdm/oracle.hpp"
#include "pdm/ordering.hpp"
#include "pdm/spectra.hpp"
#include "validation.hpp"

namespace pdm::cli {

const char* to_string(Case c) {
  switch (c) {
    case Case::v0: return "v0";
    case Case::sinh2: return "sinh2";
    case Case::tanh: return "tanh";
    case Case::ordering: return "ordering";
    case Case::custom: return "custom";
  }
  return "?";
}

namespace {

// Config problems detected after parsing; mapped to exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested energy is not an eigenvalue; mapped to exit 3.
struct NotAnEigenvalue : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kEigenTolerance = 1e-6;

struct Row {
  int index;
  ScaledEnergy eps;
  const char* provenance;
};

MassProfile mass_of(const RunConfig& cfg) { return MassProfile(cfg.m0, cfg.a, cfg.hbar); }

potential::CustomZ read_potential_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open potential file '" + path + "'");
  std::vector<double> z, v;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double zi, vi;
    if (!(fields >> zi >> vi)) {
      if (z.empty()) continue;  // header row
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'z,value'");
    }
    z.push_back(zi);
    v.push_back(vi);
  }
  return potential::CustomZ::from_samples(std::move(z), std::move(v));
}

PotentialSpec potential_of(const RunConfig& cfg) {
  const auto mp = mass_of(cfg);
  switch (cfg.which) {
    case Case::v0: return potential::Zero{};
    case Case::sinh2: return potential::SinhSquared::box(mp);
    case Case::tanh: return potential::Tanh::from_scaled(mp, *cfg.v0_scaled);
    case Case::custom: return read_potential_file(cfg.potential_file);
    case Case::ordering: break;
  }
  throw ConfigError("case 'ordering' has no potential; use the ordering subcommand");
}

void check_common(const RunConfig& cfg) {
  if (cfg.count < 1) throw ConfigError("--count must be at least 1");
  if (cfg.which == Case::tanh && !cfg.v0_scaled) throw ConfigError("case 'tanh' requires --v0");
  if (cfg.which == Case::custom && cfg.potential_file.empty())
    throw ConfigError("case 'custom' requires --potential-file");
  if (cfg.which == Case::ordering) throw ConfigError("case 'ordering' is handled by the ordering subcommand");
  if (cfg.which == Case::custom && cfg.solver != Solver::fd && cfg.solver != Solver::standard)
    throw ConfigError("unsupported solver");
}

bool uses_fd(const RunConfig& cfg) { return cfg.solver == Solver::fd || cfg.which == Case::custom; }

oracle::Grid grid_of(const RunConfig& cfg, const PotentialSpec& p) {
  if (cfg.grid_points < 3) throw ConfigError("--grid-points must be at least 3");
  return oracle::Grid::for_potential(p, cfg.grid_points);
}

std::vector<Row> eigen_rows(const RunConfig& cfg) {
  const auto p = potential_of(cfg);
  std::vector<Row> rows;
  if (uses_fd(cfg)) {
    const auto pairs = oracle::fd_eigensolve(p, grid_of(cfg, p), cfg.count);
    for (std::size_t k = 0; k < pairs.size(); ++k) rows.push_back({int(k) + 1, pairs[k].eps, "fd-oracle"});
    return rows;
  }
  switch (cfg.which) {
    case Case::v0:
      for (int n = 1; n <= cfg.count; ++n) rows.push_back({n, spectra::v0_eigenvalue(n), "analytic"});
      break;
    case Case::sinh2:
      for (int m = 1; m <= cfg.count; ++m) rows.push_back({m, ScaledEnergy{double(m) * m}, "analytic"});
      break;
    case Case::tanh: {
      const auto eps = spectra::tanh_eigenvalues(*cfg.v0_scaled, cfg.count);
      for (std::size_t k = 0; k < eps.size(); ++k) rows.push_back({int(k) + 1, eps[k], "series-root"});
      break;
    }
    default: break;
  }
  return rows;
}

Json meta_of(const RunConfig& cfg, const char* command) {
  Json params = Json::object();
  params.add("m0", cfg.m0).add("a", cfg.a).add("hbar", cfg.hbar);
  if (cfg.which == Case::tanh && cfg.v0_scaled) {
    params.add("v0_scaled", *cfg.v0_scaled);
    params.add("v0_physical", *cfg.v0_scaled * mass_of(cfg).energy_scale());
  }
  if (cfg.which == Case::custom) params.add("potential_file", cfg.potential_file);
  params.add("energy_scale", mass_of(cfg).energy_scale());
  Json versions = Json::object();
  versions.add("pdm", kVersion).add("schema", kSchemaVersion);
  Json meta = Json::object();
  meta.add("command", command).add("case", to_string(cfg.which)).add("params", std::move(params));
  meta.add("versions", std::move(versions));
  return meta;
}

Json eigen_json(const RunConfig& cfg, const std::vector<Row>& rows) {
  const auto mp = mass_of(cfg);
  Json list = Json::array();
  for (const auto& r : rows) {
    Json e = Json::object();
    e.add("index", r.index).add("eps_scaled", r.eps.value).add("E_physical", unscale_energy(mp, r.eps));
    e.add("provenance", r.provenance);
    list.push(std::move(e));
  }
  return list;
}

struct Sampled {
  Row row;
  Evaluator psi;
  Evaluator phi;
};

Evaluator interpolate_samples(const oracle::Grid& g, std::vector<double> values) {
  return [g, values = std::move(values)](double z) {
    if (z <= g.z_min() || z >= g.z_max()) return 0.0;
    const double s = (z - g.z_min()) / g.spacing();
    const auto i = std::min(std::size_t(s), values.size() - 2);
    const double w = s - double(i);
    return (1.0 - w) * values[i] + w * values[i + 1];
  };
}

Sampled select_state(const RunConfig& cfg) {
  if (!cfg.n && !cfg.eps) throw ConfigError("wavefn requires --n or --eps");
  if (cfg.n && *cfg.n < 1) throw ConfigError("--n must be at least 1");
  const auto p = potential_of(cfg);

  if (uses_fd(cfg)) {
    if (!cfg.n) throw ConfigError("the fd solver selects states by --n");
    const auto g = grid_of(cfg, p);
    auto pairs = oracle::fd_eigensolve(p, g, *cfg.n);
    auto& last = pairs.back();
    auto phi = interpolate_samples(g, std::move(last.phi_samples));
    return {{*cfg.n, last.eps, "fd-oracle"}, map_wavefunction_z_to_x(phi), phi};
  }

  auto pick = [&](std::vector<spectra::Eigenstate> states, const char* provenance) -> Sampled {
    const auto& s = states.back();
    return {{s.n, s.eps, provenance}, s.psi_x, s.phi_z};
  };

  switch (cfg.which) {
    case Case::v0: {
      int n = cfg.n.value_or(0);
      if (cfg.eps) {
        const auto level = spectra::v0_existence_check(*cfg.eps);
        if (!level) throw NotAnEigenvalue("eps is not of the form n(n+1)");
        n = level->n;
      }
      return pick(spectra::v0_eigenstates(n), "analytic");
    }
    case Case::sinh2: {
      int m = cfg.n.value_or(0);
      if (cfg.eps) {
        const double root = std::round(std::sqrt(std::max(*cfg.eps, 0.0)));
        if (root < 1.0 || std::abs(root * root - *cfg.eps) > kEigenTolerance * std::max(1.0, *cfg.eps))
          throw NotAnEigenvalue("eps is not a perfect square m^2 with m >= 1");
        m = int(root);
      }
      return pick(spectra::sinh2_eigenstates(m), "analytic");
    }
    case Case::tanh: {
      if (cfg.n) return pick(spectra::tanh_eigenstates(*cfg.v0_scaled, *cfg.n), "series-root");
      auto sol = std::make_shared<const spectra::TanhSolution>(*cfg.v0_scaled, ScaledEnergy{*cfg.eps});
      if (!sol->is_eigenvalue()) throw NotAnEigenvalue("eps is not an eigenvalue of the tanh case");
      const int index = spectra::tanh_interior_nodes(*cfg.v0_scaled, ScaledEnergy{*cfg.eps}) + 1;
      return {{index, ScaledEnergy{*cfg.eps}, "series-root"},
              [sol](double x) { return sol->psi(x); },
              [sol](double z) { return sol->phi(z); }};
    }
    default: break;
  }
  throw ConfigError("unsupported case for wavefn");
}

std::vector<double> sample_points(const RunConfig& cfg) {
  if (cfg.samples < 2) throw ConfigError("--samples must be at least 2");
  if (!(cfg.x_min < cfg.x_max)) throw ConfigError("--x-min must be below --x-max");
  std::vector<double> xs(std::size_t(cfg.samples));
  for (int i = 0; i < cfg.samples; ++i)
    xs[std::size_t(i)] = cfg.x_min + (cfg.x_max - cfg.x_min) * double(i) / double(cfg.samples - 1);
  return xs;
}

std::string render_eigen(const RunConfig& cfg) {
  check_common(cfg);
  const auto rows = eigen_rows(cfg);
  std::ostringstream os;
  if (cfg.format == Format::json) {
    Json doc = Json::object();
    Json meta = meta_of(cfg, "eigen");
    meta.add("solver", uses_fd(cfg) ? "fd" : "default");
    if (uses_fd(cfg)) meta.add("grid_points", cfg.grid_points);
    doc.add("meta", std::move(meta)).add("eigenvalues", eigen_json(cfg, rows));
    doc.write(os);
    os << '\n';
  } else {
    const auto mp = mass_of(cfg);
    CsvTable t({"index", "eps_scaled", "E_physical", "provenance"});
    for (const auto& r : rows)
      t.add_row({std::to_string(r.index), format_number(r.eps.value),
                 format_number(unscale_energy(mp, r.eps)), r.provenance});
    t.write(os);
  }
  return os.str();
}

std::string render_wavefn(const RunConfig& cfg) {
  check_common(cfg);
  const auto xs = sample_points(cfg);
  const auto state = select_state(cfg);
  const auto mp = mass_of(cfg);
  std::ostringstream os;
  if (cfg.format == Format::json) {
    Json samples = Json::array();
    for (double x : xs) {
      const double z = x_to_z(x);
      Json s = Json::object();
      s.add("x", x).add("psi", state.psi(x)).add("z", z).add("phi", state.phi(z));
      samples.push(std::move(s));
    }
    Json doc = Json::object();
    Json meta = meta_of(cfg, "wavefn");
    meta.add("solver", uses_fd(cfg) ? "fd" : "default");
    doc.add("meta", std::move(meta)).add("eigenvalues", eigen_json(cfg, {state.row}));
    doc.add("samples", std::move(samples));
    doc.write(os);
    os << '\n';
  } else {
    CsvTable t({"index", "eps_scaled", "E_physical", "x", "psi", "z", "phi"});
    for (double x : xs) {
      const double z = x_to_z(x);
      t.add_row({std::to_string(state.row.index), format_number(state.row.eps.value),
                 format_number(unscale_energy(mp, state.row.eps)), format_number(x),
                 format_number(state.psi(x)), format_number(z), format_number(state.phi(z))});
    }
    t.write(os);
  }
  return os.str();
}

std::string render_ordering(const RunConfig& cfg) {
  const auto mp = mass_of(cfg);
  const OrderingParams o(cfg.alpha, cfg.gamma);
  RunConfig sampled = cfg;
  if (sampled.x_min == -5.0 && sampled.x_max == 5.0) {
    sampled.x_min = -10.0;
    sampled.x_max = 10.0;
  }
  const auto xs = sample_points(sampled);
  std::ostringstream os;
  if (cfg.format == Format::json) {
    double max_abs = 0.0;
    Json samples = Json::array();
    for (double x : xs) {
      const double u = kinematic_potential(o, mp, x);
      max_abs = std::max(max_abs, std::abs(u));
      Json s = Json::object();
      s.add("x", x).add("U_k", u);
      samples.push(std::move(s));
    }
    Json ord = Json::object();
    ord.add("alpha", o.alpha()).add("beta", o.beta()).add("gamma", o.gamma());
    ord.add("ambiguity_free", is_ambiguity_free(o)).add("max_abs_U_k", max_abs);
    ord.add("U_k_origin", kinematic_potential(o, mp, 0.0));
    RunConfig shown = cfg;
    shown.which = Case::ordering;
    Json doc = Json::object();
    doc.add("meta", meta_of(shown, "ordering")).add("ordering", std::move(ord));
    doc.add("samples", std::move(samples));
    doc.write(os);
    os << '\n';
  } else {
    CsvTable t({"x", "U_k"});
    for (double x : xs) t.add_row({format_number(x), format_number(kinematic_potential(o, mp, x))});
    t.write(os);
  }
  return os.str();
}

std::string render_validate(const RunConfig& cfg, bool& all_passed) {
  ValidationOptions opt;
  opt.mass = mass_of(cfg);
  opt.grid_points = cfg.grid_points;
  opt.perturb_eps = cfg.perturb_eps;
  // The full suite covers every case; --case ordering narrows it to one ordering.
  if (cfg.which == Case::ordering) opt.ordering = OrderingParams(cfg.alpha, cfg.gamma);
  const auto checks = run_validation(opt);
  all_passed = std::all_of(checks.begin(), checks.end(),
                           [](const Check& c) { return c.informational || c.passed; });
  std::ostringstream os;
  if (cfg.format == Format::json) {
    Json list = Json::array();
    for (const auto& c : checks) {
      Json j = Json::object();
      j.add("name", c.name).add("passed", c.passed).add("value", c.value).add("threshold", c.threshold);
      if (c.informational) j.add("informational", true);
      list.push(std::move(j));
    }
    Json doc = Json::object();
    doc.add("meta", meta_of(cfg, "validate")).add("checks", std::move(list)).add("passed", all_passed);
    doc.write(os);
    os << '\n';
  } else {
    CsvTable t({"name", "passed", "value", "threshold", "informational"});
    for (const auto& c : checks)
      t.add_row({c.name, c.passed ? "true" : "false", format_number(c.value), format_number(c.threshold),
                 c.informational ? "true" : "false"});
    t.write(os);
  }
  return os.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << text;
    return;
  }
  std::filesystem::path path(cfg.output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) path = std::filesystem::path(dir) / path;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'");
  f << text;
  if (!f) throw ConfigError("write to '" + path.string() + "' failed");
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_case) {
  static const std::map<std::string, Case> cases = {{"v0", Case::v0},
                                                    {"sinh2", Case::sinh2},
                                                    {"tanh", Case::tanh},
                                                    {"ordering", Case::ordering},
                                                    {"custom", Case::custom}};
  static const std::map<std::string, Format> formats = {{"json", Format::json}, {"csv", Format::csv}};
  if (with_case)
    sub->add_option("--case", cfg.which, "v0 | sinh2 | tanh | ordering | custom")
        ->transform(CLI::CheckedTransformer(cases, CLI::ignore_case));
  sub->add_option("--m0", cfg.m0, "mass scale m0")->check(CLI::PositiveNumber);
  sub->add_option("--a", cfg.a, "inverse width a")->check(CLI::PositiveNumber);
  sub->add_option("--hbar", cfg.hbar, "hbar")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "json | csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  sub->add_option("--output,-o", cfg.output, "output file (relative paths resolve under $PDM_OUTPUT_DIR)");
}

void add_case_options(CLI::App* sub, RunConfig& cfg) {
  static const std::map<std::string, Solver> solvers = {{"default", Solver::standard}, {"fd", Solver::fd}};
  sub->add_option("--v0", cfg.v0_scaled, "scaled tanh amplitude 2 m0 V0 / (a^2 hbar^2)");
  sub->add_option("--grid-points", cfg.grid_points, "finite-difference grid size");
  sub->add_option("--solver", cfg.solver, "default | fd")
      ->transform(CLI::CheckedTransformer(solvers, CLI::ignore_case));
  sub->add_option("--potential-file", cfg.potential_file, "CSV of z,value for the custom case");
}

void add_sampling(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--x-min", cfg.x_min, "first sample");
  sub->add_option("--x-max", cfg.x_max, "last sample");
  sub->add_option("--samples", cfg.samples, "number of samples");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bound states of the solitonic position-dependent-mass Schroedinger equation", "pdm"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* eigen = app.add_subcommand("eigen", "eigenvalue table");
  add_common(eigen, cfg, true);
  add_case_options(eigen, cfg);
  eigen->add_option("--count", cfg.count, "number of levels");

  auto* wavefn = app.add_subcommand("wavefn", "sampled psi(x) and phi(z) for one state");
  add_common(wavefn, cfg, true);
  add_case_options(wavefn, cfg);
  wavefn->add_option("--n", cfg.n, "state index (1 = ground state)");
  wavefn->add_option("--eps", cfg.eps, "scaled energy; must be an eigenvalue");
  add_sampling(wavefn, cfg);

  auto* ordering = app.add_subcommand("ordering", "kinematic potential U_k for an ordering");
  add_common(ordering, cfg, false);
  ordering->add_option("--alpha", cfg.alpha, "von Roos alpha");
  ordering->add_option("--gamma", cfg.gamma, "von Roos gamma");
  add_sampling(ordering, cfg);

  auto* validate = app.add_subcommand("validate", "run the invariant suite");
  add_common(validate, cfg, true);
  validate->add_option("--grid-points", cfg.grid_points, "finite-difference grid size");
  validate->add_option("--perturb-eps", cfg.perturb_eps, "shift every eigenvalue in the residual checks");
  validate->add_option("--alpha", cfg.alpha, "ordering alpha (with --case ordering)");
  validate->add_option("--gamma", cfg.gamma, "ordering gamma (with --case ordering)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    std::string text;
    int status = kExitOk;
    if (eigen->parsed()) {
      text = render_eigen(cfg);
    } else if (wavefn->parsed()) {
      text = render_wavefn(cfg);
    } else if (ordering->parsed()) {
      text = render_ordering(cfg);
    } else {
      bool passed = false;
      text = render_validate(cfg, passed);
      if (!passed) status = kExitValidationFailed;
    }
    emit(cfg, text, out);
    return status;
  } catch (const ConfigError& e) {
    err << "pdm: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const PreconditionError& e) {
    err << "pdm: invalid configuration: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "pdm: invalid configuration: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NotAnEigenvalue& e) {
    err << "pdm: " << e.what() << '\n';
    return kExitSolverError;
  } catch (const ConvergenceError& e) {
    err << "pdm: solver did not converge: " << e.what() << '\n';
    return kExitSolverError;
  } catch (const std::exception& e) {
    err << "pdm: " << e.what() << '\n';
    return kExitSolverError;
  }
}

}  // namespace pdm::cli
