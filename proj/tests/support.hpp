#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}
