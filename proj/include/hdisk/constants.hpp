#pragma once

#include <numbers>

namespace hdisk {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace hdisk
