#pragma once

// von Roos kinetic-operator orderings m^alpha p m^beta p m^gamma with
// alpha + beta + gamma = -1, and the kinematic potential they generate for
// the solitonic mass profile.

#include "pdm/masstransform.hpp"

namespace pdm {

class OrderingParams {
 public:
  /// beta is derived from the constraint: beta = -1 - alpha - gamma.
  OrderingParams(double alpha, double gamma);

  /// Checks alpha + beta + gamma = -1 (to 1e-12); PreconditionError otherwise.
  static OrderingParams from_triple(double alpha, double beta, double gamma);

  static OrderingParams weyl() { return OrderingParams(0.0, 0.0); }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double alpha_, beta_, gamma_;
};

/// U_k(x) = -(hbar^2 / 4 m^3) [ (alpha+gamma-1)(m/2) m'' + (1 - alpha gamma - alpha - gamma) m'^2 ]
/// at physical x, with m, m', m'' in closed form.
double kinematic_potential(const OrderingParams& o, const MassProfile& mp, double x);

/// alpha + gamma = 1 and alpha gamma + alpha + gamma = 1, i.e. (0, 1) or (1, 0).
bool is_ambiguity_free(const OrderingParams& o);

}  // namespace pdm
