#pragma once

#include "hdisk/constants.hpp"

#include <cmath>
#include <cstddef>

namespace hdisk {

/// sin and cos of the grid angle 2πk/n, with k reduced modulo n by integer
/// arithmetic so that mirrored grid points give exactly negated sines.
inline double grid_sin(std::size_t k, std::size_t n) {
  k %= n;
  if (2 * k > n) return -std::sin(kTwoPi * static_cast<double>(n - k) / static_cast<double>(n));
  if (2 * k == n) return 0.0;
  return std::sin(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
}

inline double grid_cos(std::size_t k, std::size_t n) {
  k %= n;
  if (2 * k > n) k = n - k;
  return std::cos(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace hdisk
