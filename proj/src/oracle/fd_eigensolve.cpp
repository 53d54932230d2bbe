#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pdm/error.hpp"
#include "pdm/oracle.hpp"

namespace pdm::oracle {

Grid::Grid(double z_min, double z_max, int n_points)
    : z_min_(z_min), z_max_(z_max), n_points_(n_points) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (!(z_min >= -half_pi && z_max <= half_pi && z_min < z_max))
    throw PreconditionError("Grid: requires -pi/2 <= z_min < z_max <= pi/2");
  if (n_points < 3) throw PreconditionError("Grid: n_points must be >= 3");
}

Grid Grid::symmetric(int n_points, double inset) {
  const double edge = std::numbers::pi / 2.0 - inset;
  return Grid(-edge, edge, n_points);
}

Grid Grid::for_potential(const PotentialSpec& p, int n_points) {
  return symmetric(n_points, has_bounded_effective_potential(p) ? 0.0 : kWallInset);
}

int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double shift) {
  const double pivmin = std::numeric_limits<double>::min() * 1e3;
  int negatives = 0;
  double q = diag[0] - shift;
  for (std::size_t i = 0;; ++i) {
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
    if (i + 1 == diag.size()) break;
    q = diag[i + 1] - shift - off[i] * off[i] / q;
  }
  return negatives;
}

namespace {

std::pair<double, double> gershgorin(const std::vector<double>& diag, const std::vector<double>& off) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i < off.size() ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  return {lo, hi};
}

double bisect_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off, int k,
                         double lo, double hi) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi)) || mid == lo || mid == hi) break;
    if (sturm_count(diag, off, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// Solves (T - shift I) x = b in place for symmetric tridiagonal T, with
// partial pivoting (same elimination order as LAPACK dgtsv).
void shifted_solve(const std::vector<double>& diag, const std::vector<double>& off, double shift,
                   std::vector<double>& b) {
  const std::size_t n = diag.size();
  std::vector<double> d(n), dl(off), du(off), du2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = diag[i] - shift;
  const double tiny = std::numeric_limits<double>::epsilon() *
                      std::max(1.0, std::abs(diag.empty() ? 1.0 : diag[0] - shift));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = tiny;
      const double fact = dl[i] / d[i];
      d[i + 1] -= fact * du[i];
      b[i + 1] -= fact * b[i];
      du2[i] = 0.0;
    } else {
      const double fact = d[i] / dl[i];
      d[i] = dl[i];
      const double temp = d[i + 1];
      d[i + 1] = du[i] - fact * temp;
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du2[i];
      }
      du[i] = temp;
      const double tb = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tb - fact * b[i + 1];
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = tiny;
  b[n - 1] /= d[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
  for (std::size_t i = n - 2; i-- > 0;) b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
}

}  // namespace

double tridiagonal_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off, int k) {
  if (diag.empty() || off.size() + 1 != diag.size())
    throw PreconditionError("tridiagonal_eigenvalue: off-diagonal must have size n - 1");
  if (k < 0 || std::size_t(k) >= diag.size())
    throw PreconditionError("tridiagonal_eigenvalue: index out of range");
  auto [lo, hi] = gershgorin(diag, off);
  return bisect_eigenvalue(diag, off, k, lo, hi);
}

std::vector<Eigenpair> fd_eigensolve(const PotentialSpec& p, const Grid& g, int count) {
  if (count < 1 || count >= g.n_points() / 4)
    throw PreconditionError("fd_eigensolve: grid too coarse for the requested count (need count < n_points/4)");

  const int interior = g.n_points() - 2;
  const double h = g.spacing();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<double> diag(static_cast<std::size_t>(interior));
  std::vector<double> off(std::size_t(interior - 1), -inv_h2);
  for (int i = 0; i < interior; ++i) diag[std::size_t(i)] = 2.0 * inv_h2 + effective_potential(p, g.point(i + 1));

  auto [lo, hi] = gershgorin(diag, off);
  std::vector<Eigenpair> pairs;
  pairs.reserve(std::size_t(count));
  for (int k = 0; k < count; ++k) {
    const double lambda = bisect_eigenvalue(diag, off, k, lo, hi);
    lo = lambda - 1e-9 * std::max(1.0, std::abs(lambda));

    // Inverse iteration from a smooth, non-symmetric start vector.
    std::vector<double> v(static_cast<std::size_t>(interior));
    for (int i = 0; i < interior; ++i) v[std::size_t(i)] = 1.0 + 0.1 * std::sin(0.37 * double(i));
    const double shift = lambda + 1e-10 * std::max(1.0, std::abs(lambda));
    for (int iter = 0; iter < 3; ++iter) {
      shifted_solve(diag, off, shift, v);
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm * h);
      for (double& x : v) x /= norm;
    }

    std::vector<double> phi(std::size_t(g.n_points()), 0.0);
    std::copy(v.begin(), v.end(), phi.begin() + 1);
    double largest = 0.0;
    for (double x : phi) largest = std::max(largest, std::abs(x));
    const auto first = std::find_if(phi.begin(), phi.end(),
                                    [&](double x) { return std::abs(x) > 1e-3 * largest; });
    if (first != phi.end() && *first < 0.0)
      for (double& x : phi) x = -x;
    pairs.push_back(Eigenpair{ScaledEnergy{lambda}, std::move(phi)});
  }
  return pairs;
}

}  // namespace pdm::oracle
