#pragma once

#include <cmath>
#include <string>

#include "aoastat/angles.hpp"
#include "aoastat/errors.hpp"
#include "aoastat/stats_core.hpp"
#include "aoastat/types.hpp"
#include "aoastat/wind_data.hpp"

namespace aoastat {

enum class ControlMode {
    FixedTSR,  ///< rotor tracks a fixed tip speed ratio of the averaged wind
    FixedRPM,  ///< rotor turns at a fixed rotational speed
};

/// Idealized turbine control model at one blade station.
struct TurbineConfig {
    ControlMode mode{ControlMode::FixedTSR};
    Scalar lambda_T{7.0};        ///< tip speed ratio (FixedTSR)
    Scalar n_r{0.0};             ///< rotor speed, rpm (FixedRPM)
    Scalar R{40.0};              ///< rotor radius, m
    Scalar r{20.0};              ///< blade station radius, m
    Scalar tau_a{2.0};           ///< control averaging window, s
    Scalar blockage{2.0 / 3.0};  ///< axial inflow deceleration factor

    /// lambda_T scaled to the blade station: lambda_T * r / R.
    Scalar local_tsr() const { return lambda_T * r / R; }
    void validate() const;
    std::string label() const;  ///< e.g. "tsr7" or "rpm15"
};

/// Reference point for the angle-of-attack change.
enum class AoaCase {
    TsrAveraged,  ///< case a: fixed TSR tracking the trailing-averaged wind
    RpmAveraged,  ///< case b: fixed rpm, pitch trimmed to the averaged wind
    RpmInstant,   ///< case c: fixed rpm, instantaneous reference (no averaging)
};

const char* case_label(AoaCase c);  // "a" | "b" | "c"

/// Per-scale rate-of-change summary of AOA increments.
struct RateSummary {
    Scalar tau{0};
    Scalar sigma_rate{0};  ///< sigma(delta_alpha) / tau, deg/s
    Scalar max_rate{0};    ///< max |delta_alpha| / tau, deg/s
};

/// Blade-station tangential speed for a rotor at n_r rpm: 2*pi*r*n_r/60 [m/s].
Scalar tip_speed(Scalar n_r, Scalar r);

/// Yaw misalignment of the new wind against the reference heading,
/// wrapped into (-180, 180].
template <typename S>
S delta_phi(S phi_new_deg, S phi_ref_deg) {
    return static_cast<S>(wrap_delta_deg(static_cast<Scalar>(phi_new_deg) -
                                         static_cast<Scalar>(phi_ref_deg)));
}

namespace detail {

// Signed angle-of-attack change from the apparent-wind triangle.
// The blade station moves tangentially at u_tan; the decelerated new wind
// of magnitude w arrives yawed by dphi, contributing (-w sin(dphi)) along
// the tangential axis and (w cos(dphi)) along the axial axis. The arccos
// of the law-of-cosines ratio is non-negative by construction; the sign of
// the axial component of the new apparent wind restores the branch, which
// is what produces the negative increments. ref_angle is the trim angle
// the control system holds. Returns degrees.
template <typename S>
S signed_aoa_change(S u_tan, S w_new, S dphi_deg, S ref_angle_rad) {
    using std::abs;
    using std::acos;
    using std::cos;
    using std::sin;
    using std::sqrt;

    const S dphi = static_cast<S>(deg_to_rad(static_cast<Scalar>(dphi_deg)));
    const S s = sin(dphi);
    const S c = cos(dphi);
    const S num = u_tan - w_new * s;
    const S den2 = u_tan * u_tan + w_new * w_new - S(2) * w_new * u_tan * s;
    if (!(den2 > S(0)))
        throw DataError("aoa: degenerate apparent wind (zero magnitude)");
    const S den = sqrt(den2);

    S arg = num / den;
    if (arg > S(1) || arg < S(-1)) {
        if (abs(arg) - S(1) > S(1e-12))
            throw DataError("aoa: arccos argument outside [-1, 1]");
        arg = arg > S(0) ? S(1) : S(-1);  // floating-point guard
    }
    S theta = acos(arg);
    if (w_new * c < S(0)) theta = -theta;
    return static_cast<S>(rad_to_deg(static_cast<Scalar>(theta - ref_angle_rad)));
}

}  // namespace detail

/// Case a: AOA change for a fixed tip speed ratio turbine trimmed to the
/// trailing-averaged wind u_bar, facing the new wind u_new yawed by
/// dphi_deg. Returns degrees.
template <typename S>
S delta_aoa_fixed_tsr(S u_bar, S u_new, S dphi_deg, const TurbineConfig& cfg) {
    if (cfg.mode != ControlMode::FixedTSR)
        throw ConfigError("delta_aoa_fixed_tsr requires FixedTSR mode");
    if (!(u_bar > S(0))) throw DataError("delta_aoa_fixed_tsr: u_bar must be > 0");
    if (!(u_new >= S(0))) throw DataError("delta_aoa_fixed_tsr: u_new must be >= 0");
    const S lam_r = static_cast<S>(cfg.local_tsr());
    const S b = static_cast<S>(cfg.blockage);
    // Rotor speed tracks u_bar, so the trim angle atan(b / lam_r) is
    // independent of the wind level.
    const S ref = std::atan(b / lam_r);
    return detail::signed_aoa_change(u_bar * lam_r, b * u_new, dphi_deg, ref);
}

/// Case b: AOA change for a fixed-rpm turbine with pitch trimmed to the
/// trailing-averaged wind u_bar. Returns degrees.
template <typename S>
S delta_aoa_fixed_rpm(S u_bar, S u_new, S dphi_deg, const TurbineConfig& cfg) {
    if (cfg.mode != ControlMode::FixedRPM)
        throw ConfigError("delta_aoa_fixed_rpm requires FixedRPM mode");
    if (!(u_bar >= S(0))) throw DataError("delta_aoa_fixed_rpm: u_bar must be >= 0");
    if (!(u_new >= S(0))) throw DataError("delta_aoa_fixed_rpm: u_new must be >= 0");
    const S ut = static_cast<S>(tip_speed(cfg.n_r, cfg.r));
    const S b = static_cast<S>(cfg.blockage);
    const S wb = b * u_bar;
    const S ref = std::acos(ut / std::sqrt(ut * ut + wb * wb));
    return detail::signed_aoa_change(ut, b * u_new, dphi_deg, ref);
}

/// Yaw-only reduction of case a: constant wind speed, so the speed cancels
/// and only the direction change dphi_deg matters.
template <typename S>
S delta_aoa_yaw_only_tsr(S dphi_deg, const TurbineConfig& cfg) {
    if (cfg.mode != ControlMode::FixedTSR)
        throw ConfigError("delta_aoa_yaw_only_tsr requires FixedTSR mode");
    const S lam_r = static_cast<S>(cfg.local_tsr());
    const S b = static_cast<S>(cfg.blockage);
    const S ref = std::atan(b / lam_r);
    return detail::signed_aoa_change(lam_r, b, dphi_deg, ref);
}

/// Yaw-only reduction of case b: the averaged speed u_bar enters both the
/// new apparent wind and the trim angle.
template <typename S>
S delta_aoa_yaw_only_rpm(S u_bar, S dphi_deg, const TurbineConfig& cfg) {
    if (cfg.mode != ControlMode::FixedRPM)
        throw ConfigError("delta_aoa_yaw_only_rpm requires FixedRPM mode");
    if (!(u_bar > S(0))) throw DataError("delta_aoa_yaw_only_rpm: u_bar must be > 0");
    return delta_aoa_fixed_rpm(u_bar, u_bar, dphi_deg, cfg);
}

/// Map a wind series to AOA increments for one turbine, case, and time
/// scale. Cases a/b compare the wind at t+tau against the trailing
/// tau_a-average at t; case c uses the raw sample at t as reference (and
/// requires FixedRPM). With yaw_only the wind speed is held constant and
/// only direction changes act. Throws DataError when no index is
/// admissible.
IncrementSeries aoa_increment_series(const WindSeries& series, const TurbineConfig& cfg,
                                     Scalar tau, AoaCase aoa_case, bool yaw_only = false);

/// Flag samples with speed outside [u_min, u_max] (inclusive) invalid.
WindSeries conditional_series(const WindSeries& series, Scalar u_min, Scalar u_max);

/// sigma and max rates of change implied by an increment series.
RateSummary rate_stats(const IncrementSeries& incs);

}  // namespace aoastat
