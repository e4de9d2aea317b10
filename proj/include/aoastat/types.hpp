#pragma once

#include <Eigen/Dense>

#include <numbers>

namespace aoastat {

using Scalar = double;
using Index = Eigen::Index;

/// Dense 1-D array of samples or derived values.
using ArrayX = Eigen::ArrayX<Scalar>;

/// Per-sample validity mask, aligned with the data arrays.
using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;

inline constexpr Scalar kPi = std::numbers::pi_v<Scalar>;

constexpr Scalar deg_to_rad(Scalar deg) { return deg * (kPi / 180.0); }
constexpr Scalar rad_to_deg(Scalar rad) { return rad * (180.0 / kPi); }

}  // namespace aoastat
