#include <algorithm>
#include <cmath>
#include <vector>

#include "pdm/error.hpp"
#include "pdm/quadrature.hpp"
#include "pdm/spectra.hpp"

namespace pdm::spectra {

double inner_product(const Eigenstate& s1, const Eigenstate& s2, double half_width) {
  if (!(half_width > 0.0)) throw PreconditionError("inner_product: half_width must be > 0");
  return integrate([&](double x) { return s1.psi_x(x) * s2.psi_x(x); }, -half_width, half_width);
}

double parity_overlap(const Eigenstate& s, double half_width) {
  if (!(half_width > 0.0)) throw PreconditionError("parity_overlap: half_width must be > 0");
  return integrate([&](double x) { return s.psi_x(x) * s.psi_x(-x); }, -half_width, half_width);
}

int count_nodes(const Eigenstate& s, int samples, double half_width) {
  if (samples < 3) throw PreconditionError("count_nodes: need at least 3 samples");
  std::vector<double> values(std::size_t(samples), 0.0);
  double largest = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = -half_width + 2.0 * half_width * double(i) / double(samples - 1);
    values[std::size_t(i)] = s.psi_x(x);
    largest = std::max(largest, std::abs(values[std::size_t(i)]));
  }
  const double floor = 1e-9 * largest;
  int nodes = 0;
  double previous = 0.0;
  for (double v : values) {
    if (std::abs(v) <= floor) continue;
    if (previous != 0.0 && (v < 0.0) != (previous < 0.0)) ++nodes;
    previous = v;
  }
  return nodes;
}

}  // namespace pdm::spectra
