#include <array>
#include <cmath>
#include <numbers>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"

namespace pdm::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// sin(pi x) with exact argument reduction, so the reflection formula keeps
// its relative accuracy next to the poles.
double sin_pi(double x) {
  double r = std::fmod(x, 2.0);  // exact
  if (r < 0.0) r += 2.0;         // r in [0, 2)
  if (r > 1.0) return -sin_pi(r - 1.0);
  if (r > 0.5) r = 1.0 - r;  // sin(pi r) = sin(pi (1 - r)), exact for r in [0.5, 1]
  return std::sin(std::numbers::pi * r);
}

double lanczos_positive(double x) {
  // Gamma(x) for x >= 1/2.
  const double xm1 = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (xm1 + double(i));
  const double t = xm1 + kLanczosG + 0.5;
  // Split the power to avoid overflow of t^(x-1/2) before the exp() factor.
  const double half_pow = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * series;
}

}  // namespace

bool is_nonpositive_integer(double x, double tol) {
  if (!std::isfinite(x)) return false;
  const double nearest = std::round(x);
  return nearest <= 0.0 && std::abs(x - nearest) <= tol;
}

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn: argument is not finite");
  if (x <= 0.0 && x == std::round(x)) throw DomainError("gamma_fn: pole at nonpositive integer");

  if (x == std::round(x) && x <= 30.0) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  if (x < 0.5) return std::numbers::pi / (sin_pi(x) * lanczos_positive(1.0 - x));
  return lanczos_positive(x);
}

}  // namespace pdm::specfun
