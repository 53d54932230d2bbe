#include "pdm/acceleration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdm/error.hpp"

namespace pdm::accel {

std::vector<double> aitken_delta2(std::span<const double> s) {
  std::vector<double> out;
  if (s.size() < 3) return out;
  out.reserve(s.size() - 2);
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    const double d2 = s[i + 2] - 2.0 * s[i + 1] + s[i];
    out.push_back(d2 == 0.0 ? s[i + 1] : s[i + 2] - (s[i + 2] - s[i + 1]) * (s[i + 2] - s[i + 1]) / d2);
  }
  return out;
}

Richardson::Richardson(double ratio, int max_order)
    : ratio_(ratio), max_order_(max_order), last_change_(std::numeric_limits<double>::infinity()) {
  if (!(ratio > 1.0)) throw PreconditionError("Richardson: ratio must be > 1");
  if (max_order < 1) throw PreconditionError("Richardson: max_order must be >= 1");
}

double Richardson::push(double value) {
  // row_ holds the previous tableau row; build the new one in place.
  std::vector<double> row{value};
  const int order = std::min<int>(int(count_), max_order_);
  double factor = 1.0;
  for (int j = 1; j <= order; ++j) {
    factor *= ratio_;
    row.push_back(row[j - 1] + (row[j - 1] - row_[j - 1]) / (factor - 1.0));
  }
  row_ = std::move(row);
  ++count_;
  const double previous = estimate_;
  estimate_ = row_.back();
  if (count_ >= 2) last_change_ = std::abs(estimate_ - previous);
  return estimate_;
}

}  // namespace pdm::accel
