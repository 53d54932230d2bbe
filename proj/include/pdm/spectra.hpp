#pragma once

// Bound states of the solitonic-mass problem for the three external
// potentials with closed-form or series eigenconditions:
//   V = 0        hypergeometric states, eps = n(n+1)
//   sinh^2       constant effective potential (box), eps = m^2
//   V0 tanh x    confluent Heun series, eigenvalues from psi(y = 1) = 0

#include <cstddef>
#include <optional>
#include <vector>

#include "pdm/masstransform.hpp"
#include "pdm/specfun.hpp"

namespace pdm::spectra {

enum class Parity { even, odd, none };

const char* to_string(Parity p);

/// One normalized bound state. psi_x and phi_z are L2-normalized
/// (int psi^2 dx = int phi^2 dz = 1); norm_constant is the factor that was
/// applied to the raw closed form or series.
struct Eigenstate {
  int n = 0;
  Parity parity = Parity::none;
  ScaledEnergy eps;
  Evaluator psi_x;
  Evaluator phi_z;
  double norm_constant = 1.0;
};

// ---------------------------------------------------------------- V = 0

/// eps = n(n+1). PreconditionError for n < 1 (zero energy is not a state).
ScaledEnergy v0_eigenvalue(int n);

/// Even solution for odd n, odd solution for even n.
Parity v0_parity(int n);

/// Raw (unnormalized) x-space state:
///   odd n:  2F1(n/2, -(n+1)/2; 1/2; tanh^2 x)
///   even n: tanh x 2F1((n+1)/2, -n/2; 3/2; tanh^2 x)
double v0_wavefunction(int n, double x);
/// Raw z-space state sec^(1/2) z * (same polynomial in sin^2 z).
double v0_wavefunction_z(int n, double z);

/// The physical local Heun solution about y = 1 (y = sech x), evaluated as
/// heun_local(H(2, -k^2, alpha, beta, gamma', -1), 1 - y) with k^2 = n(n+1);
/// gamma' = 1/2 for odd n and 3/2 for even n. For even n the x-space state is
/// tanh(x) times this value.
double v0_heun_form(int n, double y);

struct V0Level {
  int n;
  Parity parity;
};

/// Integer solution n of k^2 = n(n+1) (within 1e-9), with its parity.
std::optional<V0Level> v0_existence_check(double k2);

/// Quantity whose nonpositive-integer values quantize the V = 0 problem:
/// 3/4 - sqrt(1 + 4k^2)/4 for the even branch, 1/4 - sqrt(1 + 4k^2)/4 for the odd branch.
double v0_pole_argument(double k2, Parity branch);

/// Parameters of the 2F1 whose value at argument 1 must vanish for the
/// given branch (even: c = 1/2, odd: c = 3/2).
specfun::F21Params v0_boundary_f21(double k2, Parity branch);

/// First `count` normalized V = 0 eigenstates (n = 1..count).
std::vector<Eigenstate> v0_eigenstates(int count);

// ---------------------------------------------------------------- sinh^2

/// First `count` states of the box that the sinh^2 potential (with the
/// constant -a^2 hbar^2 / 4 m0) produces in z-space, ordered by energy:
/// index m = 1, 2, ... with eps = m^2; odd m -> sqrt(2/pi) cos(m z) (even),
/// even m -> sqrt(2/pi) sin(m z) (odd).
std::vector<Eigenstate> sinh2_eigenstates(int count);

/// The x-space closed forms as printed alongside the z-space box states,
///   even: sqrt(2/pi) sech^(1/2)(x) sech((2j+1)x)
///   odd:  sqrt(2/pi) sech^(1/2)(x) tanh(2 j x)
/// Kept only to quantify how far they are from the mapped box states.
double sinh2_printed_form(int j, Parity parity, double x);

// ---------------------------------------------------------------- tanh

/// Result of evaluating the Frobenius solution at the boundary y = 1.
struct BoundaryValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  double last_change = 0.0;
};

/// f(eps) = h(y = 1) for the r = 1 Frobenius solution of
///   y(y - 1) h'' + (2 V0 y - V0 - eps) h = 0,   h = y sum c_n y^n.
/// Partial sums at y = 1 are extrapolated in 1/N (Richardson over doubling N).
/// ConvergenceError carries terms used and the last change of the estimate.
BoundaryValue tanh_boundary_function(double v0, ScaledEnergy eps,
                                     const specfun::SeriesControl& ctl = {});

/// Plain partial sum sum_{n<=N} c_n at y = 1 (no extrapolation).
double tanh_partial_sum(double v0, ScaledEnergy eps, std::size_t terms);

/// Coefficients of the confluent Heun parameter set used by the tanh case:
/// alpha = 0, beta = gamma = -1, delta = 2 V0, eta = 1/2 - V0 - eps.
specfun::ConfluentHeunParams tanh_confluent_params(double v0, ScaledEnergy eps);

/// First `count` eigenvalues, strictly increasing; |eps error| < 1e-8.
/// PreconditionError for count < 1, count > 12 or |v0| > 50.
std::vector<ScaledEnergy> tanh_eigenvalues(double v0, int count,
                                           const specfun::SeriesControl& ctl = {});

/// Number of sign changes of h on (0, 1) for the given eps.
int tanh_interior_nodes(double v0, ScaledEnergy eps, int samples = 4000);

/// Series solution psi(x) = h(y), y = (1 + tanh x)/2, L2-normalized when
/// eps is an eigenvalue.
class TanhSolution {
 public:
  TanhSolution(double v0, ScaledEnergy eps, const specfun::SeriesControl& ctl = {});

  double v0() const noexcept { return v0_; }
  ScaledEnergy eps() const noexcept { return eps_; }
  /// False when eps is not within 1e-6 of a zero of the boundary function;
  /// such solutions diverge in z-space and are left unnormalized.
  bool is_eigenvalue() const noexcept { return is_eigenvalue_; }
  double norm_constant() const noexcept { return norm_; }
  const specfun::CoefficientSeries& series() const noexcept { return series_; }

  double psi(double x) const;
  double phi(double z) const;
  /// h(y) itself, unnormalized.
  double h(long double y) const { return series_.evaluate(y); }

 private:
  double h_at_x(double x) const;

  double v0_;
  ScaledEnergy eps_;
  specfun::CoefficientSeries series_;
  bool is_eigenvalue_ = false;
  double norm_ = 1.0;
};

/// Convenience wrapper around TanhSolution for a single point.
double tanh_wavefunction(double v0, ScaledEnergy eps, double x);

/// Normalized eigenstates for the first `count` eigenvalues. Parity is
/// reported as `none`; see parity_overlap for the quasi-parity.
std::vector<Eigenstate> tanh_eigenstates(double v0, int count);

// ---------------------------------------------------------------- shared

/// int psi1 psi2 dx over [-half_width, half_width] (flat measure).
double inner_product(const Eigenstate& s1, const Eigenstate& s2, double half_width = 25.0);

/// int psi(x) psi(-x) dx: +1 for even states, -1 for odd ones.
double parity_overlap(const Eigenstate& s, double half_width = 25.0);

/// Interior sign changes of psi on `samples` points of [-half_width, half_width];
/// samples with |psi| below 1e-9 max|psi| are skipped.
int count_nodes(const Eigenstate& s, int samples = 10000, double half_width = 12.0);

}  // namespace pdm::spectra
