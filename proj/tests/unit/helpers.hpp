#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace testing {

inline constexpr double kPi = std::numbers::pi;

inline double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

inline double rel(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace testing
