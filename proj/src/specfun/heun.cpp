#include <algorithm>
#include <cmath>

#include "pdm/error.hpp"
#include "pdm/specfun.hpp"

namespace pdm::specfun {

namespace {

constexpr double kRelationTolerance = 1e-12;

bool nearly_equal(double x, double y, double tol = kRelationTolerance) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

HeunParams::HeunParams(double d, double q, double alpha, double beta, double gamma, double delta,
                       double epsilon)
    : d_(d), q_(q), alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta), epsilon_(epsilon) {
  for (double v : {d, q, alpha, beta, gamma, delta, epsilon})
    if (!std::isfinite(v)) throw PreconditionError("HeunParams: non-finite parameter");
  if (d == 0.0 || d == 1.0) throw PreconditionError("HeunParams: d must differ from 0 and 1");
  if (!nearly_equal(alpha + beta + 1.0, gamma + delta + epsilon))
    throw PreconditionError("HeunParams: Fuchsian relation alpha+beta+1 = gamma+delta+epsilon violated");
}

HeunParams HeunParams::with_derived_epsilon(double d, double q, double alpha, double beta,
                                            double gamma, double delta) {
  return HeunParams(d, q, alpha, beta, gamma, delta, alpha + beta + 1.0 - gamma - delta);
}

namespace {

// Exponent-0 Taylor recurrence about t = 0, from substituting sum c_n t^n:
//   d (n+1)(n+gamma) c_{n+1} = [n((n-1+gamma)(1+d) + delta d + epsilon) + q] c_n
//                              - (n-1+alpha)(n-1+beta) c_{n-1}
class HeunRecurrence {
 public:
  explicit HeunRecurrence(const HeunParams& p) : p_(p) {
    if (is_nonpositive_integer(p.gamma(), 0.0))
      throw PreconditionError("heun_local: gamma is a nonpositive integer");
  }

  double current() const { return c_n_; }

  double next() {
    const double n = double(n_);
    const double diag = n * ((n - 1.0 + p_.gamma()) * (1.0 + p_.d()) + p_.delta() * p_.d() +
                             p_.epsilon()) +
                        p_.q();
    const double sub = (n - 1.0 + p_.alpha()) * (n - 1.0 + p_.beta());
    const double c_next = (diag * c_n_ - sub * c_prev_) / (p_.d() * (n + 1.0) * (n + p_.gamma()));
    c_prev_ = c_n_;
    c_n_ = c_next;
    ++n_;
    return c_n_;
  }

 private:
  const HeunParams& p_;
  std::size_t n_ = 0;
  double c_prev_ = 0.0;
  double c_n_ = 1.0;
};

}  // namespace

std::vector<double> heun_local_coefficients(const HeunParams& p, std::size_t count) {
  std::vector<double> c;
  if (count == 0) return c;
  c.reserve(count);
  HeunRecurrence rec(p);
  c.push_back(rec.current());
  while (c.size() < count) c.push_back(rec.next());
  return c;
}

double heun_local(const HeunParams& p, double t, const SeriesControl& ctl) {
  if (!std::isfinite(t)) throw DomainError("heun_local: argument is not finite");
  if (!(std::abs(t) < std::min(1.0, std::abs(p.d()))))
    throw DomainError("heun_local: requires |t| < min(1, |d|)");
  if (t == 0.0) return 1.0;

  HeunRecurrence rec(p);
  double power = 1.0;
  double sum = 1.0;
  double largest = 1.0;
  double term = 1.0;
  std::size_t quiet = 0;
  std::size_t exact_zeros = 0;
  for (std::size_t k = 1; k <= ctl.max_terms(); ++k) {
    const double c = rec.next();
    power *= t;
    term = c * power;
    sum += term;
    // Two consecutive zero coefficients: the three-term recurrence has terminated.
    exact_zeros = c == 0.0 ? exact_zeros + 1 : 0;
    if (exact_zeros >= 2) return sum;
    largest = std::max(largest, std::abs(term));
    const double scale = std::max(std::abs(sum), largest);
    quiet = std::abs(term) <= ctl.abs_tol() * scale ? quiet + 1 : 0;
    if (quiet >= ctl.stagnation_window()) return sum;
  }
  throw ConvergenceError("heun_local: series did not converge", ctl.max_terms(), std::abs(term));
}

double ArgumentMap::operator()(double t) const {
  double value = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * t + *it;
  return value;
}

HeunReduction maier_reduce_21(const HeunParams& p) {
  if (p.d() != 2.0) throw PreconditionError("maier_reduce_21: requires d = 2");
  if (!nearly_equal(p.q(), p.alpha() * p.beta()))
    throw PreconditionError("maier_reduce_21: requires q = alpha*beta");
  if (!nearly_equal(p.epsilon(), p.gamma()))
    throw PreconditionError("maier_reduce_21: requires epsilon = gamma");
  return HeunReduction{F21Params(p.alpha() / 2.0, p.beta() / 2.0, p.gamma()),
                       ArgumentMap{{0.0, 2.0, -1.0}}};
}

}  // namespace pdm::specfun
