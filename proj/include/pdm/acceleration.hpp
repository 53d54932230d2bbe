#pragma once

// Sequence acceleration for slowly convergent partial sums.

#include <span>
#include <vector>

namespace pdm::accel {

/// Aitken delta-squared transform of a sequence. Entry i of the result uses
/// s[i], s[i+1], s[i+2]; the output is two elements shorter than the input.
/// When the second difference vanishes the middle element is passed through.
std::vector<double> aitken_delta2(std::span<const double> s);

/// Richardson extrapolation of values A(h_k) computed on a geometric
/// sequence h_k = h_0 / ratio^k, assuming A(h) = A + c_1 h + c_2 h^2 + ...
///
/// Feed values one at a time; each push returns the current best estimate
/// (the last diagonal entry of the tableau, limited to `max_order`
/// eliminated error terms).
class Richardson {
 public:
  explicit Richardson(double ratio = 2.0, int max_order = 6);

  double push(double value);

  /// Difference between the last two estimates (infinity until two exist).
  double last_change() const noexcept { return last_change_; }
  std::size_t size() const noexcept { return count_; }

 private:
  double ratio_;
  int max_order_;
  std::vector<double> row_;
  std::size_t count_ = 0;
  double estimate_ = 0.0;
  double last_change_;
};

}  // namespace pdm::accel
