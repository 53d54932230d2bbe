#pragma once

// The invariant suite behind `pdm validate`.

#include <optional>
#include <string>
#include <vector>

#include "pdm/masstransform.hpp"
#include "pdm/ordering.hpp"

namespace pdm::cli {

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  /// Informational entries document a quantity and never fail the run.
  bool informational = false;
};

struct ValidationOptions {
  MassProfile mass;
  int grid_points = 20001;
  /// Added to every eigenvalue fed to the ODE residual checks (fault injection).
  double perturb_eps = 0.0;
  /// When set, only the ordering checks for this ordering are run.
  std::optional<OrderingParams> ordering;
};

std::vector<Check> ordering_checks(const OrderingParams& o, const MassProfile& mp);
std::vector<Check> run_validation(const ValidationOptions& opt);

}  // namespace pdm::cli
