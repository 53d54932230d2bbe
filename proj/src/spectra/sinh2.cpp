#include <cmath>
#include <numbers>

#include "pdm/error.hpp"
#include "pdm/spectra.hpp"

namespace pdm::spectra {

std::vector<Eigenstate> sinh2_eigenstates(int count) {
  if (count < 1) throw PreconditionError("sinh2_eigenstates: count must be >= 1");
  const double amplitude = std::sqrt(2.0 / std::numbers::pi);
  std::vector<Eigenstate> states;
  states.reserve(std::size_t(count));
  for (int m = 1; m <= count; ++m) {
    const double md = double(m);
    const bool even_state = m % 2 == 1;
    Evaluator phi = even_state ? Evaluator([=](double z) { return amplitude * std::cos(md * z); })
                               : Evaluator([=](double z) { return amplitude * std::sin(md * z); });
    states.push_back(Eigenstate{m, even_state ? Parity::even : Parity::odd, ScaledEnergy{md * md},
                                map_wavefunction_z_to_x(phi), phi, amplitude});
  }
  return states;
}

double sinh2_printed_form(int j, Parity parity, double x) {
  const double amplitude = std::sqrt(2.0 / std::numbers::pi);
  const double prefactor = amplitude / std::sqrt(std::cosh(x));
  if (parity == Parity::even) {
    if (j < 0) throw PreconditionError("sinh2_printed_form: j >= 0 for the even family");
    return prefactor / std::cosh((2.0 * j + 1.0) * x);
  }
  if (parity == Parity::odd) {
    if (j < 1) throw PreconditionError("sinh2_printed_form: j >= 1 for the odd family");
    return prefactor * std::tanh(2.0 * j * x);
  }
  throw PreconditionError("sinh2_printed_form: parity must be even or odd");
}

}  // namespace pdm::spectra
