#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/differentiation/finite_difference.hpp>

#include "pdm/error.hpp"
#include "pdm/masstransform.hpp"
#include "pdm/quadrature.hpp"

using namespace pdm;
using boost::math::differentiation::finite_difference_derivative;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Five-point first and second derivatives.
template <class F>
std::pair<double, double> derivs(F f, double x, double h = 1e-3) {
  const double f0 = f(x), f1 = f(x + h), f_1 = f(x - h), f2 = f(x + 2 * h), f_2 = f(x - 2 * h);
  return {(f_2 - 8 * f_1 + 8 * f1 - f2) / (12 * h), (-f_2 + 16 * f_1 - 30 * f0 + 16 * f1 - f2) / (12 * h * h)};
}

}  // namespace

TEST_CASE("mass profile and its derivatives") {
  const MassProfile mp(2.0, 0.7, 1.3);
  CHECK(mp.mass(0.0) == 2.0);
  CHECK(mp.energy_scale() == doctest::Approx(0.49 * 1.69 / 4.0));
  auto m = [&](double x) { return mp.mass(x); };
  auto m1 = [&](double x) { return mp.mass_d1(x); };
  for (double x : {-3.0, -0.4, 0.0, 0.9, 2.5}) {
    CHECK(mp.mass_d1(x) == doctest::Approx(finite_difference_derivative(m, x)).epsilon(1e-10));
    CHECK(mp.mass_d2(x) == doctest::Approx(finite_difference_derivative(m1, x)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(MassProfile(0.0, 1.0), PreconditionError);
  CHECK_THROWS_AS(MassProfile(1.0, -1.0), PreconditionError);
  CHECK_THROWS_AS(MassProfile(1.0, 1.0, INFINITY), PreconditionError);
}

TEST_CASE("energy scaling round trip") {
  const MassProfile mp(3.0, 0.5, 2.0);
  for (double e : {-4.0, 0.0, 0.37, 120.0}) CHECK(unscale_energy(mp, scale_energy(mp, e)) == doctest::Approx(e));
  // Default units: E = eps / 2.
  CHECK(unscale_energy(MassProfile(), ScaledEnergy{6.0}) == 3.0);
  CHECK(ScaledEnergy{1.0} < ScaledEnergy{2.0});
}

TEST_CASE("Gudermannian map identities (property)") {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-12.0, 12.0);
  for (int i = 0; i < 500; ++i) {
    const double x = u(rng), z = x_to_z(x);
    CHECK(std::abs(z) < kHalfPi);
    CHECK(std::cos(z) == doctest::Approx(1.0 / std::cosh(x)).epsilon(1e-12));
    CHECK(std::sin(z) == doctest::Approx(std::tanh(x)).epsilon(1e-14));
  }
  // dz/dx = sech x
  for (double x : {-2.0, 0.0, 1.0, 4.0})
    CHECK(finite_difference_derivative(x_to_z, x) == doctest::Approx(1.0 / std::cosh(x)).epsilon(1e-10));
}

TEST_CASE("x -> z -> x round trip for |x| <= 10") {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = -10.0 + 20.0 * i / 9999.0;
    worst = std::max(worst, std::abs(z_to_x(x_to_z(x)) - x));
  }
  CHECK(worst < 1e-12);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng);
    worst = std::max(worst, std::abs(z_to_x(x_to_z(x)) - x));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("z_to_x rejects the walls") {
  CHECK_THROWS_AS(z_to_x(kHalfPi), DomainError);
  CHECK_THROWS_AS(z_to_x(-2.0), DomainError);
  CHECK_THROWS_AS(effective_potential(potential::Zero{}, kHalfPi), DomainError);
  CHECK(std::isfinite(effective_potential(potential::Zero{}, std::nextafter(kHalfPi, 0.0))));
}

TEST_CASE("potential constructors scale consistently") {
  const MassProfile mp(2.0, 0.5, 1.5);
  const auto t = potential::Tanh::from_physical(mp, 0.3);
  CHECK(t.v0_scaled == doctest::Approx(0.3 / mp.energy_scale()));
  CHECK(potential::Tanh::from_scaled(mp, t.v0_scaled).v0 == doctest::Approx(0.3));
  const auto box = potential::SinhSquared::box(mp);
  CHECK(box.constant_scaled == doctest::Approx(-0.5));
}

TEST_CASE("x and z forms of the external potential agree (property)") {
  const MassProfile mp;
  const std::vector<PotentialSpec> specs = {potential::Zero{}, potential::Tanh::from_scaled(mp, 1.7),
                                            potential::SinhSquared::with_constant(mp, 0.2),
                                            potential::CustomZ{[](double z) { return std::cos(3 * z); }}};
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (const auto& p : specs)
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng);
      const double vx = scaled_potential_x(p, x), vz = scaled_potential_z(p, x_to_z(x));
      CHECK(std::abs(vx - vz) < 1e-9 * std::max(1.0, std::abs(vx)));
    }
}

TEST_CASE("effective potential") {
  const MassProfile mp;
  CHECK(effective_potential(potential::Zero{}, 0.0) == 0.5);
  const double z = 0.9, tz = std::tan(z);
  CHECK(effective_potential(potential::Zero{}, z) == doctest::Approx(0.5 + 0.75 * tz * tz));
  CHECK(effective_potential(potential::Tanh::from_scaled(mp, 2.0), z) ==
        doctest::Approx(0.5 + 0.75 * tz * tz + 2.0 * std::sin(z)));
  // The sinh^2 potential cancels the tan^2 wall; the box constant empties it.
  const auto s = potential::SinhSquared::with_constant(mp, 0.4);
  for (double zz : {0.0, 0.7, 1.5})
    CHECK(effective_potential(s, zz) ==
          doctest::Approx(0.5 + 0.75 * std::tan(zz) * std::tan(zz) + scaled_potential_z(s, zz)));
  for (double zz : {-1.57, 0.0, 1.2, 1.5707963}) CHECK(effective_potential(potential::SinhSquared::box(mp), zz) == 0.0);
  CHECK(has_bounded_effective_potential(s));
  CHECK_FALSE(has_bounded_effective_potential(potential::Tanh{}));
}

TEST_CASE("custom z potential interpolates its samples") {
  const auto c = potential::CustomZ::from_samples({-1.0, 0.0, 1.0}, {2.0, 0.0, 4.0});
  CHECK(c.scaled(-0.5) == doctest::Approx(1.0));
  CHECK(c.scaled(0.25) == doctest::Approx(1.0));
  CHECK(c.scaled(1.4) == 4.0);
  CHECK_THROWS_AS(potential::CustomZ::from_samples({0.0}, {1.0}), PreconditionError);
  CHECK_THROWS_AS(potential::CustomZ::from_samples({0.0, 0.0}, {1.0, 2.0}), PreconditionError);
  CHECK_THROWS_AS(potential::CustomZ::from_samples({0.0, 1.0}, {1.0}), PreconditionError);
}

TEST_CASE("the x-space operator maps onto the z-space operator") {
  // psi'' + 2 tanh psi' + (eps - Vt) sech^2 psi = sech^(5/2)(x) [phi'' + (eps - V(z)) phi]
  // for psi = cosh^(-1/2)(x) phi(z(x)) and any smooth phi.
  const MassProfile mp;
  const PotentialSpec p = potential::Tanh::from_scaled(mp, 1.3);
  const double eps = 3.7;
  auto phi = [](double z) { return std::exp(std::sin(z)) * std::cos(2 * z); };
  const auto psi = map_wavefunction_z_to_x(phi);
  for (double x : {-2.0, -0.5, 0.3, 1.1, 2.4}) {
    const auto [p1, p2] = derivs(psi, x);
    const double lhs = p2 + 2 * std::tanh(x) * p1 + (eps - scaled_potential_x(p, x)) * psi(x) / std::pow(std::cosh(x), 2);
    const double z = x_to_z(x);
    const auto [f1, f2] = derivs(phi, z);
    (void)f1;
    const double rhs = std::pow(std::cosh(x), -2.5) * (f2 + (eps - effective_potential(p, z)) * phi(z));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
  }
}

TEST_CASE("wavefunction maps are inverse and preserve the norm") {
  auto phi = [](double z) { return std::sqrt(2 / std::numbers::pi) * std::cos(z); };
  const auto psi = map_wavefunction_z_to_x(phi);
  const auto back = map_wavefunction_x_to_z(psi);
  for (double z : {-1.4, -0.3, 0.0, 0.8, 1.5}) CHECK(back(z) == doctest::Approx(phi(z)).epsilon(1e-12));
  const double nx = integrate([&](double x) { return psi(x) * psi(x); }, -40.0, 40.0);
  const double nz = integrate([&](double z) { return phi(z) * phi(z); }, -kHalfPi, kHalfPi);
  CHECK(nx == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(nz == doctest::Approx(1.0).epsilon(1e-12));
}
