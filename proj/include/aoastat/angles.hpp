#pragma once

#include <cmath>

#include "aoastat/types.hpp"

namespace aoastat {

/// Wrap an angle difference into (-180, 180]. The boundary maps to +180.
inline Scalar wrap_delta_deg(Scalar deg) {
    Scalar w = std::fmod(deg, 360.0);
    if (w <= -180.0) w += 360.0;
    if (w > 180.0) w -= 360.0;
    return w;
}

/// Normalize a compass angle into [0, 360).
inline Scalar wrap_compass_deg(Scalar deg) {
    Scalar w = std::fmod(deg, 360.0);
    if (w < 0.0) w += 360.0;
    if (w >= 360.0) w = 0.0;
    return w;
}

/// Circular (vector) mean of directions given as accumulated sine/cosine
/// sums, returned in [0, 360). Plain arithmetic means are wrong across
/// the 0/360 wrap.
inline Scalar circular_mean_deg(Scalar sin_sum, Scalar cos_sum) {
    return wrap_compass_deg(rad_to_deg(std::atan2(sin_sum, cos_sum)));
}

/// Unsigned angular distance between two compass angles, in [0, 180].
inline Scalar angular_distance_deg(Scalar a, Scalar b) {
    return std::abs(wrap_delta_deg(a - b));
}

}  // namespace aoastat
