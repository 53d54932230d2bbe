#pragma once

#include "pdm/masstransform.hpp"

namespace pdm {

/// Adaptive Gauss-Kronrod (61-point) integral of f over [a, b].
/// ConvergenceError when the final error estimate exceeds
/// max(1e-10, 1e3 * tol * max(1, |integral|)); the Kronrod estimate is
/// pessimistic, hence the slack.
double integrate(const Evaluator& f, double a, double b, double tol = 1e-13, unsigned max_depth = 10);

}  // namespace pdm
