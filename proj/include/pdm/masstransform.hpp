#pragma once

// Solitonic mass profile m(x) = m0 sech^2(a x), the x <-> z (Gudermannian)
// coordinate maps, wavefunction rescaling psi = cosh^(-1/2)(x) phi(z), energy
// scaling and the effective confining potential
//   V(z) = 1/2 + (3/4) tan^2 z + Vt(z)
// of the equivalent constant-mass problem on (-pi/2, pi/2).
//
// All x arguments below are in the scaled variable a x -> x unless stated.

#include <functional>
#include <numbers>
#include <variant>
#include <vector>

namespace pdm {

using Evaluator = std::function<double(double)>;

/// Physical triple (m0, a, hbar). All three must be positive.
class MassProfile {
 public:
  MassProfile() = default;
  MassProfile(double m0, double a, double hbar = 1.0);

  double m0() const noexcept { return m0_; }
  double a() const noexcept { return a_; }
  double hbar() const noexcept { return hbar_; }

  /// a^2 hbar^2 / (2 m0): converts scaled energies to physical ones.
  double energy_scale() const noexcept { return a_ * a_ * hbar_ * hbar_ / (2.0 * m0_); }

  // m(x) and its derivatives in the physical (unscaled) coordinate.
  double mass(double x) const;
  double mass_d1(double x) const;
  double mass_d2(double x) const;

 private:
  double m0_ = 1.0;
  double a_ = 1.0;
  double hbar_ = 1.0;
};

/// Exponent of the cosh prefactor that removes the first derivative.
struct TransformConvention {
  static constexpr double nu = -0.5;
};

/// Dimensionless energy E / energy_scale (k^2 in the V = 0 problem).
struct ScaledEnergy {
  double value = 0.0;

  friend bool operator==(ScaledEnergy, ScaledEnergy) = default;
  friend auto operator<=>(ScaledEnergy, ScaledEnergy) = default;
};

ScaledEnergy scale_energy(const MassProfile& mp, double energy);
double unscale_energy(const MassProfile& mp, ScaledEnergy eps);

// External potentials. Each variant carries both the physical constant(s) and
// their scaled form 2 m0 V / (a^2 hbar^2).
namespace potential {

struct Zero {};

/// V(x) = V0 tanh(a x)  <->  Vt(z) = v0_scaled sin z.
struct Tanh {
  double v0 = 0.0;
  double v0_scaled = 0.0;

  static Tanh from_physical(const MassProfile& mp, double v0);
  static Tanh from_scaled(const MassProfile& mp, double v0_scaled);
};

/// V(x) = -(3 a^2 hbar^2 / 8 m0) sinh^2(a x) + constant.
/// The tan^2 terms cancel and V(z) = 1/2 + constant_scaled.
struct SinhSquared {
  double constant = 0.0;
  double constant_scaled = 0.0;

  static SinhSquared with_constant(const MassProfile& mp, double constant);
  /// constant = -a^2 hbar^2 / (4 m0), which makes V(z) identically zero.
  static SinhSquared box(const MassProfile& mp);
};

/// Scaled potential supplied directly as a function of z.
struct CustomZ {
  Evaluator scaled;

  /// Piecewise-linear interpolation of (z, Vt) samples; z strictly increasing.
  static CustomZ from_samples(std::vector<double> z, std::vector<double> values);
};

}  // namespace potential

using PotentialSpec =
    std::variant<potential::Zero, potential::Tanh, potential::SinhSquared, potential::CustomZ>;

/// Largest |z| at which z-space quantities are evaluated; inputs with
/// pi/2 - kBoundaryGuard < |z| < pi/2 are clamped to it.
inline constexpr double kBoundaryGuard = 1e-12;

/// z = gd(x) = arcsin(tanh x), in (-pi/2, pi/2). Returned in long double so
/// that z_to_x(x_to_z(x)) recovers x to ~1e-15 even at |x| = 10; narrowing
/// to double is fine everywhere else.
long double x_to_z(double x);
/// x = artanh(sin z). DomainError for |z| >= pi/2.
double z_to_x(long double z);

/// Scaled external potential Vt at z. DomainError for |z| >= pi/2.
double scaled_potential_z(const PotentialSpec& p, double z);
/// Scaled external potential Vt at scaled x, as it enters
///   psi'' + 2 tanh(x) psi' + (eps - Vt(x)) sech^2(x) psi = 0.
double scaled_potential_x(const PotentialSpec& p, double x);

/// 1/2 + (3/4) tan^2 z + Vt(z). DomainError for |z| >= pi/2. The SinhSquared
/// case is evaluated in closed form (the tan^2 terms cancel exactly).
double effective_potential(const PotentialSpec& p, double z);

/// True when V(z) stays bounded up to the walls (only SinhSquared).
bool has_bounded_effective_potential(const PotentialSpec& p);

/// psi(x) = cosh^(-1/2)(x) phi(z(x)).
Evaluator map_wavefunction_z_to_x(Evaluator phi);
/// phi(z) = sec^(1/2)(z) psi(x(z)).
Evaluator map_wavefunction_x_to_z(Evaluator psi);

}  // namespace pdm
