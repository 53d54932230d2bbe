#pragma once

// Special-function kernel: Gamma, Gauss 2F1, local Heun and confluent Heun
// Frobenius series, and the (d, p) = (2, 1) Heun -> 2F1 reduction.

#include <cstddef>
#include <span>
#include <vector>

namespace pdm::specfun {

/// Absolute tolerance used when deciding that a real number sits on a pole
/// of Gamma (0, -1, -2, ...).
inline constexpr double kPoleTolerance = 1e-10;

/// True when x is within `tol` of 0, -1, -2, ...
bool is_nonpositive_integer(double x, double tol = kPoleTolerance);

/// Truncation policy shared by every series in this module.
///
/// A series stops once `stagnation_window` consecutive terms are below
/// `abs_tol` times the current scale of the sum (the larger of |sum| and the
/// largest term seen so far).
class SeriesControl {
 public:
  SeriesControl() = default;
  SeriesControl(std::size_t max_terms, double abs_tol, std::size_t stagnation_window);

  std::size_t max_terms() const noexcept { return max_terms_; }
  double abs_tol() const noexcept { return abs_tol_; }
  std::size_t stagnation_window() const noexcept { return stagnation_window_; }

 private:
  std::size_t max_terms_ = 200000;
  double abs_tol_ = 1e-15;
  std::size_t stagnation_window_ = 5;
};

class F21Params {
 public:
  /// Throws PreconditionError when c is zero or a negative integer.
  F21Params(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

 private:
  double a_, b_, c_;
};

/// Parameters of the general Heun equation
///   H'' + (gamma/t + delta/(t-1) + epsilon/(t-d)) H' + (alpha beta t - q)/(t(t-1)(t-d)) H = 0.
/// The Fuchsian relation alpha + beta + 1 = gamma + delta + epsilon is
/// enforced on construction.
class HeunParams {
 public:
  HeunParams(double d, double q, double alpha, double beta, double gamma, double delta,
             double epsilon);

  /// Builds the parameter set with epsilon fixed by the Fuchsian relation.
  static HeunParams with_derived_epsilon(double d, double q, double alpha, double beta,
                                         double gamma, double delta);

  double d() const noexcept { return d_; }
  double q() const noexcept { return q_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }
  double delta() const noexcept { return delta_; }
  double epsilon() const noexcept { return epsilon_; }

 private:
  double d_, q_, alpha_, beta_, gamma_, delta_, epsilon_;
};

/// Parameters of the confluent Heun equation in the form
///   Hc'' + (alpha + (beta+1)/y + (gamma+1)/(y-1)) Hc'
///        + [(delta + alpha(beta+gamma+2)/2) y + eta + beta/2 + (gamma-alpha)(beta+1)/2] / (y(y-1)) Hc = 0.
struct ConfluentHeunParams {
  ConfluentHeunParams(double alpha, double beta, double gamma, double delta, double eta);

  double alpha, beta, gamma, delta, eta;
};

enum class Truncation { converged, hit_max_terms };

/// Frobenius coefficients of y^r * sum_n c_n y^n, with c_0 = 1.
class CoefficientSeries {
 public:
  CoefficientSeries(std::vector<double> coefficients, double indicial_exponent,
                    Truncation truncation);

  std::span<const double> coefficients() const noexcept { return coefficients_; }
  double indicial_exponent() const noexcept { return indicial_exponent_; }
  Truncation truncation() const noexcept { return truncation_; }

  /// y^r * sum c_n y^n over the stored coefficients (summed in long double;
  /// pass y in long double when it carries more than double precision).
  double evaluate(long double y) const;
  /// First and second y-derivatives of the same truncated sum.
  double derivative(long double y) const;
  double second_derivative(long double y) const;

 private:
  std::vector<double> coefficients_;
  double indicial_exponent_;
  Truncation truncation_;
};

/// Gamma function (Lanczos, g = 7) with reflection for x < 1/2.
/// Throws DomainError at 0, -1, -2, ...
double gamma_fn(double x);

/// Gauss hypergeometric series 2F1(a, b; c; t).
///
/// Terminating series (a or b a nonpositive integer) are summed exactly as a
/// polynomial for any t. Otherwise |t| < 1 is required (DomainError) and the
/// sum is truncated per `ctl`; ConvergenceError when max_terms is reached.
double gauss_2f1(const F21Params& p, double t, const SeriesControl& ctl = {});

/// 2F1(a, b; c; 1) by the Gauss summation formula, or by the polynomial when
/// the series terminates. Returns exactly 0 when c-a or c-b sits on a Gamma
/// pole. DomainError when c - a - b <= 0.
double f21_value_at_one(const F21Params& p);

/// Local Heun function H(d, q, alpha, beta, gamma, delta; t) about t = 0
/// (exponent-0 branch, H(0) = 1). Requires |t| < min(1, |d|).
double heun_local(const HeunParams& p, double t, const SeriesControl& ctl = {});

/// First `count` Taylor coefficients of the exponent-0 local Heun solution.
std::vector<double> heun_local_coefficients(const HeunParams& p, std::size_t count);

/// Polynomial argument map R(t) = sum_k coefficients[k] t^k.
struct ArgumentMap {
  std::vector<double> coefficients;

  double operator()(double t) const;
};

struct HeunReduction {
  F21Params f21;
  ArgumentMap argument;
};

/// The (d, p) = (2, 1) reduction:
///   H(2, alpha beta, alpha, beta, gamma, delta; t) = 2F1(alpha/2, beta/2; gamma; t(2 - t)).
/// Requires d = 2, q = alpha beta and epsilon = gamma (the symmetry t -> 2 - t).
HeunReduction maier_reduce_21(const HeunParams& p);

/// Streaming form of the confluent Heun three-term recurrence
///   s_{m+1}(s_{m+1} + beta) c_{m+1} = [s_m(s_m + beta + gamma + 1 - alpha) + B] c_m
///                                     + [alpha s_{m-1} + A] c_{m-1},   s_m = m + r,
/// with A = delta + alpha(beta+gamma+2)/2 and B = eta + beta/2 + (gamma-alpha)(beta+1)/2.
class ConfluentHeunRecurrence {
 public:
  /// Throws PreconditionError when r is not an indicial exponent {0, -beta},
  /// or when the branch is resonant (the recurrence would divide by zero,
  /// i.e. the companion solution carries a logarithm).
  ConfluentHeunRecurrence(const ConfluentHeunParams& p, double branch_exponent);

  /// Index of the coefficient returned by current().
  std::size_t index() const noexcept { return m_; }
  double current() const noexcept { return c_m_; }
  /// Advances to c_{m+1} and returns it.
  double next();

 private:
  double alpha_, beta_, gamma_, r_, a_coef_, b_coef_;
  std::size_t m_ = 0;
  double c_prev_ = 0.0;
  double c_m_ = 1.0;
};

/// Frobenius coefficients of the confluent Heun equation on the chosen branch.
/// Coefficients are generated until `stagnation_window` consecutive |c_n| fall
/// below abs_tol times the largest |c_n| seen; otherwise the result is
/// flagged `hit_max_terms` (no exception).
CoefficientSeries confluent_heun_series(const ConfluentHeunParams& p, double branch_exponent,
                                        const SeriesControl& ctl = {});

}  // namespace pdm::specfun
