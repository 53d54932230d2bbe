#include "pdm/masstransform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdm/error.hpp"

namespace pdm {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double guarded_z(double z, const char* where) {
  if (!std::isfinite(z) || std::abs(z) >= kHalfPi)
    throw DomainError(std::string(where) + ": requires |z| < pi/2");
  const double limit = kHalfPi - kBoundaryGuard;
  return std::clamp(z, -limit, limit);
}

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

MassProfile::MassProfile(double m0, double a, double hbar) : m0_(m0), a_(a), hbar_(hbar) {
  if (!(m0 > 0.0) || !(a > 0.0) || !(hbar > 0.0) || !std::isfinite(m0) || !std::isfinite(a) ||
      !std::isfinite(hbar))
    throw PreconditionError("MassProfile: m0, a and hbar must be finite and positive");
}

double MassProfile::mass(double x) const {
  const double s = sech(a_ * x);
  return m0_ * s * s;
}

double MassProfile::mass_d1(double x) const {
  const double s = sech(a_ * x);
  return -2.0 * a_ * m0_ * s * s * std::tanh(a_ * x);
}

double MassProfile::mass_d2(double x) const {
  const double s = sech(a_ * x);
  const double t = std::tanh(a_ * x);
  return -2.0 * a_ * a_ * m0_ * s * s * (s * s - 2.0 * t * t);
}

ScaledEnergy scale_energy(const MassProfile& mp, double energy) {
  return ScaledEnergy{energy / mp.energy_scale()};
}

double unscale_energy(const MassProfile& mp, ScaledEnergy eps) {
  return eps.value * mp.energy_scale();
}

namespace potential {

Tanh Tanh::from_physical(const MassProfile& mp, double v0) {
  return Tanh{v0, v0 / mp.energy_scale()};
}

Tanh Tanh::from_scaled(const MassProfile& mp, double v0_scaled) {
  return Tanh{v0_scaled * mp.energy_scale(), v0_scaled};
}

SinhSquared SinhSquared::with_constant(const MassProfile& mp, double constant) {
  return SinhSquared{constant, constant / mp.energy_scale()};
}

SinhSquared SinhSquared::box(const MassProfile& mp) {
  return with_constant(mp, -mp.a() * mp.a() * mp.hbar() * mp.hbar() / (4.0 * mp.m0()));
}

CustomZ CustomZ::from_samples(std::vector<double> z, std::vector<double> values) {
  if (z.size() != values.size() || z.size() < 2)
    throw PreconditionError("CustomZ: need at least two (z, value) samples of equal length");
  if (!std::is_sorted(z.begin(), z.end(), std::less_equal<>{}) ||
      std::adjacent_find(z.begin(), z.end()) != z.end())
    throw PreconditionError("CustomZ: sample abscissae must be strictly increasing");
  return CustomZ{[z = std::move(z), v = std::move(values)](double at) {
    if (at <= z.front()) return v.front();
    if (at >= z.back()) return v.back();
    const auto hi = std::size_t(std::upper_bound(z.begin(), z.end(), at) - z.begin());
    const std::size_t lo = hi - 1;
    const double w = (at - z[lo]) / (z[hi] - z[lo]);
    return (1.0 - w) * v[lo] + w * v[hi];
  }};
}

}  // namespace potential

// Near the walls z_to_x amplifies any error in z by cosh x (about 1.1e4 at
// |x| = 10), so z is carried in long double.
long double x_to_z(double x) { return std::atan(std::sinh(static_cast<long double>(x))); }

double z_to_x(long double z) {
  // The wall is the double nearest pi/2, so callers passing M_PI / 2 are rejected.
  if (!std::isfinite(z) || std::abs(z) >= static_cast<long double>(kHalfPi))
    throw DomainError("z_to_x: requires |z| < pi/2");
  return static_cast<double>(std::asinh(std::tan(z)));
}

double scaled_potential_z(const PotentialSpec& p, double z) {
  z = guarded_z(z, "scaled_potential_z");
  return std::visit(overloaded{
                        [](const potential::Zero&) { return 0.0; },
                        [z](const potential::Tanh& t) { return t.v0_scaled * std::sin(z); },
                        [z](const potential::SinhSquared& s) {
                          const double tz = std::tan(z);
                          return -0.75 * tz * tz + s.constant_scaled;
                        },
                        [z](const potential::CustomZ& c) { return c.scaled(z); },
                    },
                    p);
}

double scaled_potential_x(const PotentialSpec& p, double x) {
  return std::visit(overloaded{
                        [](const potential::Zero&) { return 0.0; },
                        [x](const potential::Tanh& t) { return t.v0_scaled * std::tanh(x); },
                        [x](const potential::SinhSquared& s) {
                          const double sh = std::sinh(x);
                          return -0.75 * sh * sh + s.constant_scaled;
                        },
                        [x](const potential::CustomZ& c) { return c.scaled(x_to_z(x)); },
                    },
                    p);
}

double effective_potential(const PotentialSpec& p, double z) {
  z = guarded_z(z, "effective_potential");
  if (const auto* s = std::get_if<potential::SinhSquared>(&p)) return 0.5 + s->constant_scaled;
  const double tz = std::tan(z);
  return 0.5 + 0.75 * tz * tz + scaled_potential_z(p, z);
}

bool has_bounded_effective_potential(const PotentialSpec& p) {
  return std::holds_alternative<potential::SinhSquared>(p);
}

Evaluator map_wavefunction_z_to_x(Evaluator phi) {
  return [phi = std::move(phi)](double x) { return phi(x_to_z(x)) / std::sqrt(std::cosh(x)); };
}

Evaluator map_wavefunction_x_to_z(Evaluator psi) {
  return [psi = std::move(psi)](double z) {
    return psi(z_to_x(z)) / std::sqrt(std::cos(z));
  };
}

}  // namespace pdm
