#include <cmath>
#include <limits>
#include <optional>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"

namespace pdm::specfun {

SeriesControl::SeriesControl(std::size_t max_terms, double abs_tol, std::size_t stagnation_window)
    : max_terms_(max_terms), abs_tol_(abs_tol), stagnation_window_(stagnation_window) {
  if (!(abs_tol > 0.0)) throw PreconditionError("SeriesControl: abs_tol must be > 0");
  if (stagnation_window == 0) throw PreconditionError("SeriesControl: stagnation_window must be >= 1");
  if (max_terms < stagnation_window)
    throw PreconditionError("SeriesControl: max_terms must be >= stagnation_window");
}

F21Params::F21Params(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw PreconditionError("F21Params: non-finite parameter");
  if (is_nonpositive_integer(c)) throw PreconditionError("F21Params: c is zero or a negative integer");
}

namespace {

// Degree of the polynomial when a or b is a nonpositive integer.
std::optional<long> terminating_degree(const F21Params& p) {
  std::optional<long> degree;
  for (double upper : {p.a(), p.b()}) {
    if (is_nonpositive_integer(upper)) {
      const long n = -std::lround(upper);
      if (!degree || n < *degree) degree = n;
    }
  }
  return degree;
}

double terminating_sum(const F21Params& p, long degree, double t) {
  // The terminating parameter is snapped to the exact integer.
  double a = p.a();
  double b = p.b();
  if (is_nonpositive_integer(a) && -std::lround(a) == degree)
    a = -double(degree);
  else
    b = -double(degree);
  double term = 1.0;
  double sum = 1.0;
  for (long k = 0; k < degree; ++k) {
    const double kd = double(k);
    term *= (a + kd) * (b + kd) / ((p.c() + kd) * (kd + 1.0)) * t;
    sum += term;
  }
  return sum;
}

}  // namespace

double gauss_2f1(const F21Params& p, double t, const SeriesControl& ctl) {
  if (!std::isfinite(t)) throw DomainError("gauss_2f1: argument is not finite");
  if (const auto degree = terminating_degree(p)) return terminating_sum(p, *degree, t);
  if (std::abs(t) >= 1.0)
    throw DomainError("gauss_2f1: |t| >= 1 for a non-terminating series");

  double term = 1.0;
  double sum = 1.0;
  double largest = 1.0;
  std::size_t quiet = 0;
  for (std::size_t k = 0; k < ctl.max_terms(); ++k) {
    const double kd = double(k);
    term *= (p.a() + kd) * (p.b() + kd) / ((p.c() + kd) * (kd + 1.0)) * t;
    sum += term;
    largest = std::max(largest, std::abs(term));
    const double scale = std::max(std::abs(sum), largest);
    quiet = std::abs(term) <= ctl.abs_tol() * scale ? quiet + 1 : 0;
    if (quiet >= ctl.stagnation_window()) return sum;
  }
  throw ConvergenceError("gauss_2f1: series did not converge", ctl.max_terms(), std::abs(term));
}

double f21_value_at_one(const F21Params& p) {
  const double excess = p.c() - p.a() - p.b();
  if (!(excess > 0.0)) throw DomainError("f21_value_at_one: requires c - a - b > 0");
  if (is_nonpositive_integer(p.c() - p.a()) || is_nonpositive_integer(p.c() - p.b())) return 0.0;
  if (const auto degree = terminating_degree(p)) return terminating_sum(p, *degree, 1.0);
  return gamma_fn(p.c()) * gamma_fn(excess) / (gamma_fn(p.c() - p.a()) * gamma_fn(p.c() - p.b()));
}

}  // namespace pdm::specfun
