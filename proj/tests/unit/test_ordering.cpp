#include "doctest.h"

#include <cmath>
#include <random>

#include <boost/math/differentiation/finite_difference.hpp>

#include "pdm/error.hpp"
#include "pdm/ordering.hpp"

using namespace pdm;
using boost::math::differentiation::finite_difference_derivative;

namespace {

// U_k rebuilt from finite-difference derivatives of m(x).
double kinematic_potential_fd(const OrderingParams& o, const MassProfile& mp, double x) {
  auto m = [&](double t) { return mp.mass(t); };
  auto dm = [&](double t) { return finite_difference_derivative<decltype(m), double, 8>(m, t); };
  const double m0 = mp.mass(x);
  const double m1 = dm(x);
  const double m2 = finite_difference_derivative<decltype(dm), double, 6>(dm, x);
  const double al = o.alpha(), ga = o.gamma();
  return -mp.hbar() * mp.hbar() / (4 * m0 * m0 * m0) *
         ((al + ga - 1) * (m0 / 2) * m2 + (1 - al * ga - al - ga) * m1 * m1);
}

}  // namespace

TEST_CASE("beta follows from the constraint") {
  const OrderingParams o(0.3, -0.8);
  CHECK(o.beta() == doctest::Approx(-0.5));
  CHECK_NOTHROW(OrderingParams::from_triple(0.0, -1.0, 0.0));
  CHECK_THROWS_AS(OrderingParams::from_triple(0.0, 0.0, 0.0), PreconditionError);
  CHECK_THROWS_AS(OrderingParams(NAN, 0.0), PreconditionError);
}

TEST_CASE("only (0, 1) and (1, 0) are free of ordering ambiguity") {
  CHECK(is_ambiguity_free(OrderingParams(0.0, 1.0)));
  CHECK(is_ambiguity_free(OrderingParams(1.0, 0.0)));
  CHECK_FALSE(is_ambiguity_free(OrderingParams::weyl()));
  CHECK_FALSE(is_ambiguity_free(OrderingParams(0.5, 0.5)));
}

TEST_CASE("U_k vanishes identically for the ambiguity-free orderings") {
  for (const MassProfile& mp : {MassProfile(), MassProfile(2.0, 0.7, 1.3)})
    for (const auto& o : {OrderingParams(0.0, 1.0), OrderingParams(1.0, 0.0)}) {
      double worst = 0.0;
      for (int i = 0; i <= 2000; ++i) worst = std::max(worst, std::abs(kinematic_potential(o, mp, -10.0 + 0.01 * i)));
      CHECK(worst < 1e-14);
    }
}

TEST_CASE("Weyl ordering at the origin") {
  for (const MassProfile& mp : {MassProfile(), MassProfile(2.0, 0.7, 1.3), MassProfile(0.5, 3.0, 0.2)}) {
    const double expected = -mp.a() * mp.a() * mp.hbar() * mp.hbar() / (4 * mp.m0());
    CHECK(std::abs(kinematic_potential(OrderingParams::weyl(), mp, 0.0) - expected) < 1e-12);
    CHECK(kinematic_potential_fd(OrderingParams::weyl(), mp, 0.0) == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("U_k agrees with finite-difference mass derivatives (property)") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> par(-2.0, 2.0), pos(-3.0, 3.0);
  const MassProfile mp(1.5, 0.8, 1.1);
  for (int i = 0; i < 100; ++i) {
    const OrderingParams o(par(rng), par(rng));
    const double x = pos(rng);
    const double fd = kinematic_potential_fd(o, mp, x);
    CHECK(std::abs(kinematic_potential(o, mp, x) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("U_k is even in x (property)") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> par(-2.0, 2.0), pos(0.0, 8.0);
  for (int i = 0; i < 100; ++i) {
    const OrderingParams o(par(rng), par(rng));
    const double x = pos(rng);
    CHECK(kinematic_potential(o, MassProfile(), x) == doctest::Approx(kinematic_potential(o, MassProfile(), -x)));
  }
}
