#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "pdm/acceleration.hpp"
#include "pdm/error.hpp"

using namespace pdm;

TEST_CASE("Aitken is exact on geometric partial sums") {
  // sum 0.8^k = 5
  std::vector<double> s;
  double partial = 0.0, term = 1.0;
  for (int k = 0; k < 8; ++k) {
    partial += term;
    term *= 0.8;
    s.push_back(partial);
  }
  const auto acc = accel::aitken_delta2(s);
  REQUIRE(acc.size() == s.size() - 2);
  for (double v : acc) CHECK(v == doctest::Approx(5.0).epsilon(1e-13));
}

TEST_CASE("Aitken passes constant tails through and handles short input") {
  const std::vector<double> flat = {2.0, 2.0, 2.0, 2.0};
  for (double v : accel::aitken_delta2(flat)) CHECK(v == 2.0);
  CHECK(accel::aitken_delta2(std::vector<double>{1.0, 2.0}).empty());
}

TEST_CASE("Aitken speeds up the alternating log 2 series") {
  std::vector<double> s;
  double partial = 0.0;
  for (int k = 1; k <= 12; ++k) {
    partial += (k % 2 ? 1.0 : -1.0) / k;
    s.push_back(partial);
  }
  const auto acc = accel::aitken_delta2(s);
  CHECK(std::abs(acc.back() - std::log(2.0)) < 0.01 * std::abs(s.back() - std::log(2.0)));
}

TEST_CASE("Richardson removes polynomial error terms in h") {
  // A(h) = 3 + 2h - 5h^2 + h^3 on h = 1, 1/2, 1/4, ...
  accel::Richardson r(2.0, 6);
  double est = 0.0, h = 1.0;
  for (int k = 0; k < 5; ++k, h /= 2) est = r.push(3.0 + 2.0 * h - 5.0 * h * h + h * h * h);
  CHECK(est == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(r.size() == 5);
  CHECK(std::abs(r.last_change()) < 1e-12);
}

TEST_CASE("Richardson on a 1/N tail of partial sums") {
  // sum_{n<=N} 1/(n(n+1)) = 1 - 1/(N+1): error ~ 1/N - 1/N^2 + ...
  accel::Richardson r;
  double est = 0.0;
  for (int N = 16; N <= 1024; N *= 2) est = r.push(1.0 - 1.0 / (N + 1.0));
  CHECK(std::abs(est - 1.0) < 1e-10);
}

TEST_CASE("Richardson reports no change before two estimates") {
  accel::Richardson r;
  CHECK(std::isinf(r.last_change()));
  CHECK(r.push(1.0) == 1.0);
}

TEST_CASE("Richardson rejects bad settings") {
  CHECK_THROWS_AS(accel::Richardson(1.0), PreconditionError);
  CHECK_THROWS_AS(accel::Richardson(2.0, 0), PreconditionError);
}
