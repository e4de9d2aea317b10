#pragma once

#include <optional>
#include <string>

#include "aoastat/types.hpp"

namespace aoastat {

/// One wind record: time since series start [s], horizontal speed [m/s],
/// meteorological direction (coming-from, clockwise from north) [deg].
struct WindSample {
    Scalar t{0};
    Scalar u{0};
    Scalar phi{0};
    bool valid{true};
};

/// Uniformly sampled wind record, stored column-wise. Invalid samples keep
/// their index position; filters only flip validity flags, never lengths.
struct WindSeries {
    ArrayX u;          ///< speed, m/s (>= 0)
    ArrayX phi;        ///< direction, deg in [0, 360)
    BoolArray valid;   ///< exclusion flags
    Scalar rate{0};    ///< sampling rate, Hz
    Scalar t0{0};      ///< time of the first sample, s
    std::string meta;  ///< free-text source description
    Index clipped{0};  ///< generator bookkeeping: speed values clipped at the floor

    Index size() const { return u.size(); }
    Scalar time_at(Index i) const { return t0 + static_cast<Scalar>(i) / rate; }
    Scalar duration() const { return size() > 1 ? static_cast<Scalar>(size() - 1) / rate : 0.0; }
    Index valid_count() const { return valid.count(); }
    WindSample sample(Index i) const { return {time_at(i), u[i], phi[i], valid[i]}; }
};

/// Trailing moving averages aligned with the source series indices.
/// Entries are flagged invalid during warm-up (fewer than a full window of
/// trailing samples) and when more than half the window is invalid.
struct AveragedSeries {
    ArrayX u_bar;     ///< trailing mean speed, m/s
    ArrayX phi_bar;   ///< trailing circular mean direction, deg
    BoolArray valid;
    Scalar window{0}; ///< averaging window, s
};

struct SeriesSummary {
    Index n{0};
    Index n_valid{0};
    Scalar rate{0};
    Scalar duration{0};
    Scalar u_mean{0};
    Scalar u_sigma{0};
    /// IEC-style turbulence intensity: mean 10-minute standard deviation
    /// over the mean speed; falls back to the whole-record sigma/mean for
    /// short series.
    Scalar turbulence_intensity{0};
    Scalar phi_mean{0};  ///< circular mean direction, deg
};

/// Input column layout. Indices are 0-based; -1 means "not present".
/// Either (u, phi) or the horizontal components (ux east, uy north) must
/// resolve; a time column is optional when the rate is known.
struct ColumnMap {
    int t = -1;
    int u = -1;
    int phi = -1;
    int valid = -1;
    int ux = -1;
    int uy = -1;
    char delimiter = 0;  ///< 0 = auto-detect (comma, semicolon, tab, space)

    bool any() const { return t >= 0 || u >= 0 || phi >= 0 || ux >= 0 || uy >= 0; }
};

/// Parse "name=index,name=index" (names: t,u,phi,valid,ux,uy).
ColumnMap parse_column_map(const std::string& text);

/// Load a delimited text series. Column resolution order: explicit map,
/// then header-row names, then positional (t,u,phi[,valid]). Malformed
/// rows are flagged invalid, not dropped. The rate comes from
/// `rate_override`, a `# rate=` header, or the time column (which must be
/// uniform within 1e-9 s).
WindSeries load_series(const std::string& path, const ColumnMap& map = {},
                       Scalar rate_override = 0);

/// Write a series in the format load_series ingests. Values are printed
/// with 9 significant digits; a save/load/save cycle is byte-identical.
void save_series(const WindSeries& series, const std::string& path);

/// Decimate by block means (arithmetic for speed, circular for direction).
/// The source rate must be an integer multiple of `target_rate`; a block
/// containing any invalid sample is invalid.
WindSeries block_average(const WindSeries& series, Scalar target_rate);

/// Flag samples with direction inside [sector_lo, sector_hi] (inclusive,
/// wrap-aware) or speed below `min_speed`. Pass an empty sector
/// (lo == hi == 0 disabled via `sector_enabled`) to skip the sector test.
WindSeries apply_exclusions(const WindSeries& series, Scalar sector_lo,
                            Scalar sector_hi, Scalar min_speed,
                            bool sector_enabled = true);

/// Trailing moving average over [t - window, t] (the window's sample count
/// is round(window * rate); output at index i uses samples [i-m+1, i]).
AveragedSeries moving_average(const WindSeries& series, Scalar window);

SeriesSummary summarize(const WindSeries& series);

}  // namespace aoastat
