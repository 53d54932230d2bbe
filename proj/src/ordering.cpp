#include "pdm/ordering.hpp"

#include <algorithm>
#include <cmath>

#include "pdm/error.hpp"

namespace pdm {

OrderingParams::OrderingParams(double alpha, double gamma)
    : alpha_(alpha), beta_(-1.0 - alpha - gamma), gamma_(gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(gamma))
    throw PreconditionError("OrderingParams: non-finite parameter");
}

OrderingParams OrderingParams::from_triple(double alpha, double beta, double gamma) {
  const double sum = alpha + beta + gamma;
  if (std::abs(sum + 1.0) > 1e-12 * std::max({1.0, std::abs(alpha), std::abs(beta), std::abs(gamma)}))
    throw PreconditionError("OrderingParams: alpha + beta + gamma must equal -1");
  return OrderingParams(alpha, gamma);
}

double kinematic_potential(const OrderingParams& o, const MassProfile& mp, double x) {
  const double a = o.alpha();
  const double g = o.gamma();
  const double second = a + g - 1.0;
  const double first_sq = 1.0 - a * g - a - g;
  if (second == 0.0 && first_sq == 0.0) return 0.0;
  const double m = mp.mass(x);
  const double dm = mp.mass_d1(x);
  const double hbar = mp.hbar();
  return -hbar * hbar / (4.0 * m * m * m) *
         (second * 0.5 * m * mp.mass_d2(x) + first_sq * dm * dm);
}

bool is_ambiguity_free(const OrderingParams& o) {
  constexpr double tol = 1e-12;
  const double a = o.alpha();
  const double g = o.gamma();
  return std::abs(a + g - 1.0) <= tol && std::abs(a * g + a + g - 1.0) <= tol;
}

}  // namespace pdm
