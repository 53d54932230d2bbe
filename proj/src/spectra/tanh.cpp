#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "pdm/acceleration.hpp"
#include "pdm/error.hpp"
#include "pdm/quadrature.hpp"
#include "pdm/spectra.hpp"

namespace pdm::spectra {

namespace {

constexpr double kMaxAbsV0 = 50.0;
constexpr int kMaxCount = 12;
constexpr double kBoundaryAcceptTol = 1e-9;
constexpr int kMinRichardsonLevels = 5;
constexpr double kRootTol = 1e-9;  // final bracket width; midpoint error < 1e-8
constexpr double kEigenvalueProbe = 1e-6;

// The partial sums only enter their 1/N asymptotic regime once the
// recurrence coefficients (n^2 - eps)/n^2 have settled.
std::size_t first_checkpoint(double v0, double eps) {
  return 64 + std::size_t(4.0 * std::ceil(std::abs(eps) + std::abs(v0)));
}

double f_value(double v0, double eps, const specfun::SeriesControl& ctl) {
  return tanh_boundary_function(v0, ScaledEnergy{eps}, ctl).value;
}

// Bisection on a sign change; lo/hi function values are passed in.
double bisect(double v0, double lo, double hi, double f_lo, const specfun::SeriesControl& ctl) {
  while (hi - lo > kRootTol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f_value(v0, mid, ctl);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> skeleton_root(double v0, int n, const specfun::SeriesControl& ctl) {
  const double center = double(n) * double(n + 1);
  const double max_half_width = 0.5 * (2.0 * n + 1.0);
  for (double half = 0.1;; half = std::min(2.0 * half, max_half_width)) {
    const double lo = center - half;
    const double hi = center + half;
    const double f_lo = f_value(v0, lo, ctl);
    const double f_hi = f_value(v0, hi, ctl);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) != (f_hi < 0.0)) return bisect(v0, lo, hi, f_lo, ctl);
    if (half >= max_half_width) return std::nullopt;
  }
}

// Scan upward from below the minimum of the effective potential and collect
// the first `count` sign changes.
std::optional<std::vector<double>> scanned_roots(double v0, int count,
                                                 const specfun::SeriesControl& ctl) {
  const double step = 0.1;
  const double stop = double(count + 1) * double(count + 2) + std::abs(v0) + 10.0;
  double lo = 0.5 - std::abs(v0);
  double f_lo = f_value(v0, lo, ctl);
  std::vector<double> roots;
  while (int(roots.size()) < count && lo < stop) {
    const double hi = lo + step;
    const double f_hi = f_value(v0, hi, ctl);
    if (f_hi == 0.0 || (f_lo < 0.0) != (f_hi < 0.0))
      roots.push_back(f_hi == 0.0 ? hi : bisect(v0, lo, hi, f_lo, ctl));
    lo = hi;
    f_lo = f_hi;
  }
  if (int(roots.size()) < count) return std::nullopt;
  return roots;
}

}  // namespace

specfun::ConfluentHeunParams tanh_confluent_params(double v0, ScaledEnergy eps) {
  return specfun::ConfluentHeunParams(0.0, -1.0, -1.0, 2.0 * v0, 0.5 - v0 - eps.value);
}

double tanh_partial_sum(double v0, ScaledEnergy eps, std::size_t terms) {
  specfun::ConfluentHeunRecurrence rec(tanh_confluent_params(v0, eps), 1.0);
  double sum = rec.current();
  while (rec.index() < terms) sum += rec.next();
  return sum;
}

BoundaryValue tanh_boundary_function(double v0, ScaledEnergy eps, const specfun::SeriesControl& ctl) {
  specfun::ConfluentHeunRecurrence rec(tanh_confluent_params(v0, eps), 1.0);
  accel::Richardson richardson(2.0, 6);
  double sum = rec.current();
  double estimate = sum;
  std::size_t checkpoint = std::min(first_checkpoint(v0, eps.value), ctl.max_terms());
  while (true) {
    while (rec.index() < checkpoint) sum += rec.next();
    estimate = richardson.push(sum);
    const bool enough_levels = richardson.size() >= std::size_t(kMinRichardsonLevels);
    if (enough_levels && richardson.last_change() < kBoundaryAcceptTol)
      return BoundaryValue{estimate, rec.index(), richardson.last_change()};
    // Levels must stay geometric (ratio 2) for the extrapolation to hold.
    if (2 * checkpoint > ctl.max_terms()) break;
    checkpoint *= 2;
  }
  if (richardson.last_change() < kBoundaryAcceptTol)
    return BoundaryValue{estimate, rec.index(), richardson.last_change()};
  throw ConvergenceError("tanh_boundary_function: extrapolated boundary value did not settle",
                         rec.index(), richardson.last_change());
}

int tanh_interior_nodes(double v0, ScaledEnergy eps, int samples) {
  const auto series = specfun::confluent_heun_series(tanh_confluent_params(v0, eps), 1.0);
  int nodes = 0;
  double previous = 0.0;
  for (int i = 1; i < samples; ++i) {
    const double value = series.evaluate(double(i) / double(samples));
    if (value == 0.0) continue;
    if (previous != 0.0 && (value < 0.0) != (previous < 0.0)) ++nodes;
    previous = value;
  }
  return nodes;
}

std::vector<ScaledEnergy> tanh_eigenvalues(double v0, int count, const specfun::SeriesControl& ctl) {
  if (count < 1 || count > kMaxCount)
    throw PreconditionError("tanh_eigenvalues: count must be in [1, 12]");
  if (!std::isfinite(v0) || std::abs(v0) > kMaxAbsV0)
    throw PreconditionError("tanh_eigenvalues: |V0| must not exceed 50");

  auto indexed_correctly = [&](const std::vector<double>& roots) {
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k > 0 && !(roots[k] > roots[k - 1])) return false;
      if (tanh_interior_nodes(v0, ScaledEnergy{roots[k]}) != int(k)) return false;
    }
    return true;
  };

  std::vector<double> roots;
  bool skeleton_ok = true;
  for (int n = 1; n <= count && skeleton_ok; ++n) {
    const auto root = skeleton_root(v0, n, ctl);
    if (root)
      roots.push_back(*root);
    else
      skeleton_ok = false;
  }
  if (!skeleton_ok || !indexed_correctly(roots)) {
    auto scanned = scanned_roots(v0, count, ctl);
    if (!scanned || !indexed_correctly(*scanned))
      throw ConvergenceError("tanh_eigenvalues: could not bracket the requested eigenvalues");
    roots = std::move(*scanned);
  }

  std::vector<ScaledEnergy> out;
  out.reserve(roots.size());
  for (double r : roots) out.push_back(ScaledEnergy{r});
  return out;
}

TanhSolution::TanhSolution(double v0, ScaledEnergy eps, const specfun::SeriesControl& ctl)
    : v0_(v0), eps_(eps), series_(specfun::confluent_heun_series(tanh_confluent_params(v0, eps), 1.0, ctl)) {
  const double f0 = f_value(v0, eps.value, ctl);
  if (f0 == 0.0) {
    is_eigenvalue_ = true;
  } else {
    const double below = f_value(v0, eps.value - kEigenvalueProbe, ctl);
    const double above = f_value(v0, eps.value + kEigenvalueProbe, ctl);
    is_eigenvalue_ = (below < 0.0) != (above < 0.0) || below == 0.0 || above == 0.0;
  }
  if (is_eigenvalue_) {
    const double norm_sq = integrate([this](double x) {
      const double v = h_at_x(x);
      return v * v;
    }, -25.0, 25.0);
    norm_ = 1.0 / std::sqrt(norm_sq);
  }
}

double TanhSolution::h_at_x(double x) const {
  // y = (1 + tanh x)/2 = 1/(1 + e^{-2x}), accurate for large |x|.
  return series_.evaluate(1.0L / (1.0L + std::exp(-2.0L * static_cast<long double>(x))));
}

double TanhSolution::psi(double x) const { return norm_ * h_at_x(x); }

double TanhSolution::phi(double z) const {
  if (!(std::abs(z) < std::numbers::pi / 2.0)) throw DomainError("TanhSolution::phi: requires |z| < pi/2");
  return norm_ * series_.evaluate(0.5L + 0.5L * std::sin(static_cast<long double>(z))) / std::sqrt(std::cos(z));
}

double tanh_wavefunction(double v0, ScaledEnergy eps, double x) {
  return TanhSolution(v0, eps).psi(x);
}

std::vector<Eigenstate> tanh_eigenstates(double v0, int count) {
  const auto energies = tanh_eigenvalues(v0, count);
  std::vector<Eigenstate> states;
  states.reserve(energies.size());
  int k = 0;
  for (const auto eps : energies) {
    auto solution = std::make_shared<const TanhSolution>(v0, eps);
    states.push_back(Eigenstate{++k, Parity::none, eps,
                                [solution](double x) { return solution->psi(x); },
                                [solution](double z) { return solution->phi(z); },
                                solution->norm_constant()});
  }
  return states;
}

}  // namespace pdm::spectra
