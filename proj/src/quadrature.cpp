#include "pdm/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pdm/error.hpp"

namespace pdm {

double integrate(const Evaluator& f, double a, double b, double tol, unsigned max_depth) {
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, max_depth, tol, &error);
  if (!std::isfinite(value) || error > std::max(1e-10, 1e3 * tol * std::max(1.0, std::abs(value))))
    throw ConvergenceError("integrate: adaptive quadrature did not converge (error estimate " +
                           std::to_string(error) + ")");
  return value;
}

}  // namespace pdm
