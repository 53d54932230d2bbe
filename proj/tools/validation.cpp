#include "validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "output.hpp"
#include "pdm/oracle.hpp"
#include "pdm/spectra.hpp"
#include "pdm/specfun.hpp"

namespace pdm::cli {

namespace {

constexpr std::array<double, 6> kTableI = {1.9503339,  6.0115779,  12.0083261,
                                           20.0055193, 30.0038467, 42.0028139};

Check below(std::string name, double value, double threshold) {
  return Check{std::move(name), value < threshold, value, threshold, false};
}

double max_orthonormality_error(const std::vector<spectra::Eigenstate>& states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i; j < states.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(spectra::inner_product(states[i], states[j]) - expected));
    }
  return worst;
}

double max_off_diagonal(const std::vector<spectra::Eigenstate>& states) {
  double worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      worst = std::max(worst, std::abs(spectra::inner_product(states[i], states[j])));
  return worst;
}

double worst_residual(const PotentialSpec& p, const std::vector<spectra::Eigenstate>& states,
                      double perturb) {
  double worst = 0.0;
  for (const auto& s : states)
    worst = std::max(worst, oracle::ode_residual_x(p, ScaledEnergy{s.eps.value + perturb}, s.psi_x));
  return worst;
}

}  // namespace

std::vector<Check> ordering_checks(const OrderingParams& o, const MassProfile& mp) {
  std::vector<Check> checks;
  const std::string tag = "[alpha=" + format_number(o.alpha()) + ",gamma=" + format_number(o.gamma()) + "]";
  double max_abs = 0.0;
  double max_asym = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = -10.0 + 0.01 * double(i);
    const double u = kinematic_potential(o, mp, x);
    max_abs = std::max(max_abs, std::abs(u));
    max_asym = std::max(max_asym, std::abs(u - kinematic_potential(o, mp, -x)));
  }
  const bool free = is_ambiguity_free(o);
  checks.push_back(Check{"ordering.ambiguity_free" + tag, true, free ? 1.0 : 0.0, 0.0, true});
  if (free) checks.push_back(below("ordering.kinematic_potential_vanishes" + tag, max_abs, 1e-14));
  checks.push_back(below("ordering.kinematic_potential_even" + tag, max_asym, 1e-12));
  checks.push_back(Check{"ordering.kinematic_potential_at_origin" + tag, true,
                         kinematic_potential(o, mp, 0.0), 0.0, true});
  return checks;
}

std::vector<Check> run_validation(const ValidationOptions& opt) {
  if (opt.ordering) return ordering_checks(*opt.ordering, opt.mass);

  std::vector<Check> checks;

  // Heun <-> 2F1 reduction on both V = 0 sectors.
  {
    double worst = 0.0;
    for (double k2 : {2.0, 6.0, 12.0, 20.0}) {
      const double root = std::sqrt(1.0 + 4.0 * k2);
      for (bool even : {true, false}) {
        const double alpha = even ? (-1.0 + root) / 2.0 : (1.0 + root) / 2.0;
        const double beta = even ? (-1.0 - root) / 2.0 : (1.0 - root) / 2.0;
        const auto hp = specfun::HeunParams::with_derived_epsilon(2.0, alpha * beta, alpha, beta,
                                                                  even ? 0.5 : 1.5, -1.0);
        const auto red = specfun::maier_reduce_21(hp);
        for (int i = 0; i < 50; ++i) {
          const double t = 0.9 * double(i) / 49.0;
          worst = std::max(worst, std::abs(specfun::heun_local(hp, t) -
                                           specfun::gauss_2f1(red.f21, red.argument(t))));
        }
      }
    }
    checks.push_back(below("specfun.heun_2f1_reduction", worst, 1e-10));
  }

  // Quantization through Gamma poles.
  {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
      const double k2 = double(n) * double(n + 1);
      const auto branch = spectra::v0_parity(n);
      ok = ok && specfun::is_nonpositive_integer(spectra::v0_pole_argument(k2, branch), 1e-9) &&
           specfun::f21_value_at_one(spectra::v0_boundary_f21(k2, branch)) == 0.0;
    }
    for (auto branch : {spectra::Parity::even, spectra::Parity::odd})
      ok = ok && !specfun::is_nonpositive_integer(spectra::v0_pole_argument(5.0, branch), 1e-9) &&
           specfun::f21_value_at_one(spectra::v0_boundary_f21(5.0, branch)) != 0.0;
    checks.push_back(Check{"spectra.v0_gamma_pole_quantization", ok, ok ? 1.0 : 0.0, 1.0, false});
  }

  const auto grid_singular = oracle::Grid::symmetric(opt.grid_points);

  // V = 0.
  {
    const PotentialSpec zero = potential::Zero{};
    const auto fd = oracle::fd_eigensolve(zero, grid_singular, 6);
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n)
      worst = std::max(worst, std::abs(fd[std::size_t(n - 1)].eps.value - spectra::v0_eigenvalue(n).value));
    checks.push_back(below("oracle.v0_fd_agreement", worst, 1e-5));
    const auto states = spectra::v0_eigenstates(6);
    checks.push_back(below("spectra.v0_ode_residual", worst_residual(zero, states, opt.perturb_eps), 1e-7));
    checks.push_back(below("spectra.v0_orthonormality", max_orthonormality_error(states), 1e-8));
  }

  // sinh^2 box.
  {
    const PotentialSpec box = potential::SinhSquared::box(opt.mass);
    const auto fd = oracle::fd_eigensolve(box, oracle::Grid::for_potential(box, opt.grid_points), 4);
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m)
      worst = std::max(worst, std::abs(fd[std::size_t(m - 1)].eps.value - double(m * m)));
    checks.push_back(below("oracle.sinh2_box_spectrum", worst, 1e-6));
    const auto states = spectra::sinh2_eigenstates(4);
    checks.push_back(below("spectra.sinh2_ode_residual", worst_residual(box, states, opt.perturb_eps), 1e-7));

    // Printed x-space closed forms, for the record.
    double printed = 0.0;
    for (int j = 0; j <= 2; ++j) {
      const spectra::Parity par = spectra::Parity::even;
      const double eps = double((2 * j + 1) * (2 * j + 1));
      printed = std::max(printed, oracle::ode_residual_x(box, ScaledEnergy{eps}, [j](double x) {
                           return spectra::sinh2_printed_form(j, par, x);
                         }));
    }
    for (int j = 1; j <= 2; ++j) {
      const double eps = double(4 * j * j);
      printed = std::max(printed, oracle::ode_residual_x(box, ScaledEnergy{eps}, [j](double x) {
                           return spectra::sinh2_printed_form(j, spectra::Parity::odd, x);
                         }));
    }
    checks.push_back(Check{"spectra.sinh2_printed_forms_residual", true, printed, 1e-7, true});
  }

  // tanh, V0 = 1.
  {
    const PotentialSpec tanh = potential::Tanh::from_scaled(opt.mass, 1.0);
    const auto eigen = spectra::tanh_eigenvalues(1.0, 6);
    double rel = 0.0;
    for (std::size_t k = 0; k < 6; ++k) rel = std::max(rel, std::abs(eigen[k].value - kTableI[k]) / kTableI[k]);
    checks.push_back(below("spectra.tanh_table_reproduction", rel, 1e-5));
    const auto fd = oracle::fd_eigensolve(tanh, grid_singular, 6);
    double agree = 0.0;
    for (std::size_t k = 0; k < 6; ++k) agree = std::max(agree, std::abs(eigen[k].value - fd[k].eps.value));
    checks.push_back(below("oracle.tanh_fd_agreement", agree, 1e-4));
    const auto states = spectra::tanh_eigenstates(1.0, 6);
    checks.push_back(below("spectra.tanh_orthogonality", max_off_diagonal(states), 1e-6));
    checks.push_back(below("spectra.tanh_ode_residual", worst_residual(tanh, states, opt.perturb_eps), 1e-7));
  }

  // V0 -> 0 limit.
  {
    const auto eigen = spectra::tanh_eigenvalues(1e-4, 4);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
      worst = std::max(worst, std::abs(eigen[std::size_t(n - 1)].value - double(n * (n + 1))));
    checks.push_back(below("spectra.tanh_v0_limit", worst, 1e-3));
  }

  // Ambiguity-free orderings and the Weyl value.
  for (const auto& o : {OrderingParams(0.0, 1.0), OrderingParams(1.0, 0.0)})
    for (auto& c : ordering_checks(o, opt.mass))
      if (!c.informational) checks.push_back(std::move(c));
  {
    const auto& mp = opt.mass;
    const double expected = -mp.hbar() * mp.hbar() * mp.a() * mp.a() / (4.0 * mp.m0());
    checks.push_back(below("ordering.weyl_origin_value",
                           std::abs(kinematic_potential(OrderingParams::weyl(), mp, 0.0) - expected), 1e-12));
  }

  return checks;
}

}  // namespace pdm::cli
