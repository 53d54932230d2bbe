#include <algorithm>
#include <cmath>

#include "pdm/error.hpp"
#include "pdm/oracle.hpp"

namespace pdm::oracle {

double ode_residual_x(const PotentialSpec& p, ScaledEnergy eps, const Evaluator& psi,
                      const ResidualOptions& opt) {
  if (opt.samples < 2 || !(opt.x_max > opt.x_min) || !(opt.step > 0.0))
    throw PreconditionError("ode_residual_x: invalid sampling options");
  const double h = opt.step;
  double worst = 0.0;
  double largest = 0.0;
  for (int i = 0; i < opt.samples; ++i) {
    const double x = opt.x_min + (opt.x_max - opt.x_min) * double(i) / double(opt.samples - 1);
    const double fm2 = psi(x - 2.0 * h);
    const double fm1 = psi(x - h);
    const double f0 = psi(x);
    const double fp1 = psi(x + h);
    const double fp2 = psi(x + 2.0 * h);
    const double d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    const double d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    const double sech = 1.0 / std::cosh(x);
    const double residual =
        d2 + 2.0 * std::tanh(x) * d1 + (eps.value - scaled_potential_x(p, x)) * sech * sech * f0;
    worst = std::max(worst, std::abs(residual));
    largest = std::max(largest, std::abs(f0));
  }
  if (largest == 0.0) throw PreconditionError("ode_residual_x: psi vanishes on every sample");
  return worst / largest;
}

}  // namespace pdm::oracle
