#include <algorithm>
#include <cmath>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"

namespace pdm::specfun {

ConfluentHeunParams::ConfluentHeunParams(double alpha_, double beta_, double gamma_,
                                         double delta_, double eta_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_), eta(eta_) {
  for (double v : {alpha, beta, gamma, delta, eta})
    if (!std::isfinite(v)) throw PreconditionError("ConfluentHeunParams: non-finite parameter");
}

ConfluentHeunRecurrence::ConfluentHeunRecurrence(const ConfluentHeunParams& p,
                                                 double branch_exponent)
    : alpha_(p.alpha),
      beta_(p.beta),
      gamma_(p.gamma),
      r_(branch_exponent),
      a_coef_(p.delta + 0.5 * p.alpha * (p.beta + p.gamma + 2.0)),
      b_coef_(p.eta + 0.5 * p.beta + 0.5 * (p.gamma - p.alpha) * (p.beta + 1.0)) {
  if (branch_exponent != 0.0 && branch_exponent != -p.beta)
    throw PreconditionError("confluent Heun: branch exponent must be 0 or -beta");
  // s(s + beta) = 0 for some s = m + r, m >= 1: the exponents differ by a
  // positive integer and this branch is the logarithmic one.
  auto hits_zero = [](double k) { return k >= 0.0 && k == std::round(k); };
  if (hits_zero(-(r_ + 1.0)) || hits_zero(-(r_ + beta_ + 1.0)))
    throw PreconditionError(
        "confluent Heun: resonant branch (exponents differ by a positive integer); "
        "the logarithmic companion solution is not provided");
}

double ConfluentHeunRecurrence::next() {
  const double s = double(m_) + r_;
  const double s_next = s + 1.0;
  const double diag = s * (s + beta_ + gamma_ + 1.0 - alpha_) + b_coef_;
  const double sub = alpha_ * (s - 1.0) + a_coef_;
  const double c_next = (diag * c_m_ + sub * c_prev_) / (s_next * (s_next + beta_));
  c_prev_ = c_m_;
  c_m_ = c_next;
  ++m_;
  return c_m_;
}

CoefficientSeries::CoefficientSeries(std::vector<double> coefficients, double indicial_exponent,
                                     Truncation truncation)
    : coefficients_(std::move(coefficients)),
      indicial_exponent_(indicial_exponent),
      truncation_(truncation) {
  if (coefficients_.empty() || coefficients_.front() != 1.0)
    throw PreconditionError("CoefficientSeries: c_0 must equal 1");
}

// Horner sums run in long double: near y = 1 the partial sums of an
// eigenstate cancel by several orders of magnitude.
double CoefficientSeries::evaluate(long double y) const {
  long double sum = 0.0L;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) sum = sum * y + *it;
  return static_cast<double>(std::pow(y, static_cast<long double>(indicial_exponent_)) * sum);
}

double CoefficientSeries::derivative(long double y) const {
  // d/dy sum c_n y^(n+r) = sum (n+r) c_n y^(n+r-1)
  const long double r = indicial_exponent_;
  if (r == 0.0L) {
    long double sum = 0.0L;
    for (std::size_t i = coefficients_.size(); i-- > 1;) sum = sum * y + (long double)(i) * coefficients_[i];
    return static_cast<double>(sum);
  }
  long double sum = 0.0L;
  for (std::size_t i = coefficients_.size(); i-- > 0;)
    sum = sum * y + ((long double)(i) + r) * coefficients_[i];
  return static_cast<double>(std::pow(y, r - 1.0L) * sum);
}

double CoefficientSeries::second_derivative(long double y) const {
  const long double r = indicial_exponent_;
  if (r == 0.0L) {
    long double sum = 0.0L;
    for (std::size_t i = coefficients_.size(); i-- > 2;)
      sum = sum * y + (long double)(i) * (long double)(i - 1) * coefficients_[i];
    return static_cast<double>(sum);
  }
  if (r == 1.0L) {
    // sum (n+1) n c_n y^(n-1): the n = 0 term vanishes.
    long double sum = 0.0L;
    for (std::size_t i = coefficients_.size(); i-- > 1;)
      sum = sum * y + (long double)(i + 1) * (long double)(i) * coefficients_[i];
    return static_cast<double>(sum);
  }
  long double sum = 0.0L;
  for (std::size_t i = coefficients_.size(); i-- > 0;)
    sum = sum * y + ((long double)(i) + r) * ((long double)(i) + r - 1.0L) * coefficients_[i];
  return static_cast<double>(std::pow(y, r - 2.0L) * sum);
}

CoefficientSeries confluent_heun_series(const ConfluentHeunParams& p, double branch_exponent,
                                        const SeriesControl& ctl) {
  ConfluentHeunRecurrence rec(p, branch_exponent);
  std::vector<double> c{rec.current()};
  double largest = 1.0;
  std::size_t quiet = 0;
  while (c.size() < ctl.max_terms()) {
    const double next = rec.next();
    c.push_back(next);
    largest = std::max(largest, std::abs(next));
    quiet = std::abs(next) <= ctl.abs_tol() * largest ? quiet + 1 : 0;
    if (quiet >= ctl.stagnation_window()) {
      c.resize(c.size() - quiet);
      if (c.empty()) c.push_back(1.0);
      return CoefficientSeries(std::move(c), branch_exponent, Truncation::converged);
    }
  }
  return CoefficientSeries(std::move(c), branch_exponent, Truncation::hit_max_terms);
}

}  // namespace pdm::specfun
