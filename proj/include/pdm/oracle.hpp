#pragma once

// Independent checks: a second-order finite-difference eigensolver for
//   -phi'' + V(z) phi = eps phi,  phi(z_min) = phi(z_max) = 0,
// and the residual of the scaled x-space equation
//   psi'' + 2 tanh(x) psi' + (eps - Vt(x)) sech^2(x) psi = 0.

#include <cstddef>
#include <vector>

#include "pdm/masstransform.hpp"

namespace pdm::oracle {

/// Default distance of the grid ends from +-pi/2 for singular potentials.
inline constexpr double kWallInset = 1e-6;
inline constexpr int kDefaultPoints = 20001;

/// Uniform grid on [z_min, z_max] within [-pi/2, pi/2].
class Grid {
 public:
  Grid(double z_min, double z_max, int n_points);

  /// [-(pi/2 - inset), pi/2 - inset].
  static Grid symmetric(int n_points = kDefaultPoints, double inset = kWallInset);
  /// Exact walls for bounded effective potentials, the inset otherwise.
  static Grid for_potential(const PotentialSpec& p, int n_points = kDefaultPoints);

  double z_min() const noexcept { return z_min_; }
  double z_max() const noexcept { return z_max_; }
  int n_points() const noexcept { return n_points_; }
  double spacing() const noexcept { return (z_max_ - z_min_) / double(n_points_ - 1); }
  double point(int i) const noexcept { return z_min_ + spacing() * double(i); }

 private:
  double z_min_, z_max_;
  int n_points_;
};

/// phi_samples has one value per grid point, zero at both ends, and
/// sum phi_i^2 h = 1. The sign is fixed so that the first sample above
/// 1e-3 max|phi| is positive.
struct Eigenpair {
  ScaledEnergy eps;
  std::vector<double> phi_samples;
};

/// Lowest `count` eigenpairs of the discretized z-space problem.
/// PreconditionError (grid too coarse) unless count < n_points / 4.
std::vector<Eigenpair> fd_eigensolve(const PotentialSpec& p, const Grid& g, int count);

/// Symmetric tridiagonal eigenvalue k (0-based, ascending) by Sturm-sequence
/// bisection. Exposed for testing.
double tridiagonal_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off,
                              int k);

/// Number of eigenvalues of the symmetric tridiagonal matrix below `shift`.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double shift);

struct ResidualOptions {
  double x_min = -5.0;
  double x_max = 5.0;
  int samples = 2001;
  double step = 1e-3;  // 5-point stencils
};

/// max |psi'' + 2 tanh psi' + (eps - Vt) sech^2 psi| / max |psi| over the samples.
double ode_residual_x(const PotentialSpec& p, ScaledEnergy eps, const Evaluator& psi,
                      const ResidualOptions& opt = {});

}  // namespace pdm::oracle
