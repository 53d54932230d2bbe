#include <cmath>
#include <numbers>

#include "pdm/error.hpp"
#include "pdm/quadrature.hpp"
#include "pdm/spectra.hpp"

namespace pdm::spectra {

const char* to_string(Parity p) {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::none: return "none";
  }
  return "none";
}

namespace {

void require_level(int n) {
  if (n < 1) throw PreconditionError("V=0 levels start at n = 1 (zero energy is not a state)");
}

// Terminating 2F1 in u = tanh^2 x = sin^2 z, without the tanh / sin prefactor.
double v0_polynomial(int n, double u) {
  const double nd = double(n);
  if (n % 2 == 1) return specfun::gauss_2f1(specfun::F21Params(nd / 2.0, -(nd + 1.0) / 2.0, 0.5), u);
  return specfun::gauss_2f1(specfun::F21Params((nd + 1.0) / 2.0, -nd / 2.0, 1.5), u);
}

}  // namespace

ScaledEnergy v0_eigenvalue(int n) {
  require_level(n);
  return ScaledEnergy{double(n) * double(n + 1)};
}

Parity v0_parity(int n) {
  require_level(n);
  return n % 2 == 1 ? Parity::even : Parity::odd;
}

double v0_wavefunction(int n, double x) {
  require_level(n);
  const double t = std::tanh(x);
  const double poly = v0_polynomial(n, t * t);
  return n % 2 == 1 ? poly : t * poly;
}

double v0_wavefunction_z(int n, double z) {
  require_level(n);
  if (!(std::abs(z) < std::numbers::pi / 2.0)) throw DomainError("v0_wavefunction_z: requires |z| < pi/2");
  const double s = std::sin(z);
  const double poly = v0_polynomial(n, s * s);
  const double prefactor = 1.0 / std::sqrt(std::cos(z));
  return n % 2 == 1 ? prefactor * poly : prefactor * s * poly;
}

double v0_heun_form(int n, double y) {
  require_level(n);
  if (!(y > 0.0 && y <= 1.0)) throw DomainError("v0_heun_form: requires y in (0, 1]");
  const double k2 = v0_eigenvalue(n).value;
  const double root = std::sqrt(1.0 + 4.0 * k2);
  const bool even_state = n % 2 == 1;
  const double alpha = even_state ? (-1.0 + root) / 2.0 : (1.0 + root) / 2.0;
  const double beta = even_state ? (-1.0 - root) / 2.0 : (1.0 - root) / 2.0;
  const double gamma = even_state ? 0.5 : 1.5;
  const auto params = specfun::HeunParams::with_derived_epsilon(2.0, -k2, alpha, beta, gamma, -1.0);
  return specfun::heun_local(params, 1.0 - y);
}

std::optional<V0Level> v0_existence_check(double k2) {
  if (!(k2 > 0.0) || !std::isfinite(k2)) return std::nullopt;
  const double n_real = (-1.0 + std::sqrt(1.0 + 4.0 * k2)) / 2.0;
  const long n = std::lround(n_real);
  if (n < 1) return std::nullopt;
  const double nd = double(n);
  if (std::abs(nd * (nd + 1.0) - k2) > 1e-9 * std::max(1.0, k2)) return std::nullopt;
  return V0Level{int(n), v0_parity(int(n))};
}

double v0_pole_argument(double k2, Parity branch) {
  const double root = std::sqrt(1.0 + 4.0 * k2);
  if (branch == Parity::even) return 0.75 - 0.25 * root;
  if (branch == Parity::odd) return 0.25 - 0.25 * root;
  throw PreconditionError("v0_pole_argument: branch must be even or odd");
}

specfun::F21Params v0_boundary_f21(double k2, Parity branch) {
  const double root = std::sqrt(1.0 + 4.0 * k2);
  if (branch == Parity::even) return specfun::F21Params((-1.0 + root) / 4.0, (-1.0 - root) / 4.0, 0.5);
  if (branch == Parity::odd) return specfun::F21Params((1.0 + root) / 4.0, (1.0 - root) / 4.0, 1.5);
  throw PreconditionError("v0_boundary_f21: branch must be even or odd");
}

std::vector<Eigenstate> v0_eigenstates(int count) {
  if (count < 1) throw PreconditionError("v0_eigenstates: count must be >= 1");
  std::vector<Eigenstate> states;
  states.reserve(std::size_t(count));
  for (int n = 1; n <= count; ++n) {
    const double norm_sq = integrate([n](double x) {
      const double v = v0_wavefunction(n, x);
      return v * v;
    }, -25.0, 25.0);
    const double c = 1.0 / std::sqrt(norm_sq);
    states.push_back(Eigenstate{
        n, v0_parity(n), v0_eigenvalue(n),
        [n, c](double x) { return c * v0_wavefunction(n, x); },
        [n, c](double z) { return c * v0_wavefunction_z(n, z); }, c});
  }
  return states;
}

}  // namespace pdm::spectra
