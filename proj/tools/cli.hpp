#pragma once

// `pdm` command-line front end. run() is the whole program minus argv
// plumbing so tests can drive it in-process.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pdm::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Environment variable naming the directory for relative --output paths.
inline constexpr const char* kOutputDirEnv = "PDM_OUTPUT_DIR";

enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitConfigError = 2,
  kExitSolverError = 3,
};

enum class Case { v0, sinh2, tanh, ordering, custom };
enum class Format { json, csv };
enum class Solver { standard, fd };

const char* to_string(Case c);

struct RunConfig {
  Case which = Case::v0;
  std::optional<double> v0_scaled;
  double m0 = 1.0;
  double a = 1.0;
  double hbar = 1.0;
  int count = 6;
  int grid_points = 20001;
  Format format = Format::json;
  std::string output;
  Solver solver = Solver::standard;

  // wavefn
  std::optional<int> n;
  std::optional<double> eps;
  double x_min = -5.0;
  double x_max = 5.0;
  int samples = 201;

  // ordering
  double alpha = 0.0;
  double gamma = 1.0;

  // custom
  std::string potential_file;

  // validate
  double perturb_eps = 0.0;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdm::cli
