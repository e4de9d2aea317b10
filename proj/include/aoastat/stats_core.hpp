#pragma once

#include <string>
#include <vector>

#include "aoastat/types.hpp"
#include "aoastat/wind_data.hpp"

namespace aoastat {

/// Increments xi_tau(t) = xi(t + tau) - xi(t) of one quantity at one time
/// scale. `t` holds the left endpoint of each admissible pair. A pair is
/// admissible only when every sample in [t, t + tau] is valid, so
/// increments never span excluded data.
struct IncrementSeries {
    Scalar tau{0};        ///< time scale, s
    std::string source;   ///< "speed" | "direction" | "aoa"
    ArrayX values;
    ArrayX t;

    Index size() const { return values.size(); }
};

/// Density-normalized histogram: `density[i]` applies over
/// [edges[i], edges[i+1]]; sum(density * width) == 1.
struct Histogram {
    ArrayX edges;    ///< bins + 1 entries
    ArrayX density;  ///< bins entries

    Index bins() const { return density.size(); }
    Scalar center(Index i) const { return 0.5 * (edges[i] + edges[i + 1]); }
    Scalar integral() const;
};

/// Equal-width binning spanning mean +/- span_sigmas * sigma; samples
/// outside the span accumulate into the edge bins.
struct HistogramPolicy {
    Index bins = 101;
    Scalar span_sigmas = 6.0;
};

/// Moments use the population (1/n) estimators throughout: sigma is the
/// population standard deviation, nu the standardized third moment and
/// gamma the standardized fourth moment minus 3 (zero for a Gaussian).
struct DistributionSummary {
    Scalar sigma{0};
    Scalar nu{0};
    Scalar gamma{0};
    Index n{0};
    Histogram histogram;  ///< empty unless filled by describe()
};

struct PowerLawFit {
    Scalar exponent{0};
    Scalar prefactor{0};
    Scalar r_squared{0};
    Scalar tau_lo{0};
    Scalar tau_hi{0};
    Index n_points{0};
};

struct GdiSample {
    Scalar t{0};
    Scalar gdi{0};  ///< in [0, 2]
};

/// Generic increments of a masked scalar series sampled at `rate`.
/// tau must be an integer multiple of the sample period and shorter than
/// the series.
IncrementSeries increments(const ArrayX& x, const BoolArray& valid, Scalar rate,
                           Scalar t0, Scalar tau, const std::string& source);

/// Speed increments of a wind series.
IncrementSeries speed_increments(const WindSeries& series, Scalar tau);

/// Direction increments with each raw difference wrapped into (-180, 180].
IncrementSeries direction_increments(const WindSeries& series, Scalar tau);

/// Population moments; requires n >= 4 and nonzero variance.
DistributionSummary moments(const ArrayX& values);

/// Density-normalized histogram; requires n >= bins and a nonzero span.
Histogram estimate_pdf(const ArrayX& values, const HistogramPolicy& policy = {});

/// moments() plus estimate_pdf() in one pass.
DistributionSummary describe(const ArrayX& values, const HistogramPolicy& policy = {});

/// Least-squares line through (log tau, log y) restricted to
/// tau in [tau_lo, tau_hi]; needs >= 3 points with y > 0 in range.
PowerLawFit powerlaw_fit(const ArrayX& taus, const ArrayX& ys, Scalar tau_lo, Scalar tau_hi);

/// n-th order structure function: mean of (xi_tau)^n over admissible
/// speed increments.
Scalar structure_function(const WindSeries& series, int order, Scalar tau);
Scalar structure_function(const ArrayX& x, const BoolArray& valid, Scalar rate,
                          int order, Scalar tau);

/// Gust directional index per admissible pair:
///   |u_tau| / max|u_tau| + |phi_tau| / max|phi_tau|
/// with both maxima taken over the whole valid series at this tau. Throws
/// DataError when either maximum is zero (all-constant channel).
std::vector<GdiSample> gdi(const WindSeries& series, Scalar tau);

/// count(values >= threshold) / n.
Scalar exceedance_probability(const ArrayX& values, Scalar threshold);

/// Taylor frozen-turbulence length scale: u_mean * tau [m].
Scalar taylor_length(Scalar tau, Scalar u_mean);

}  // namespace aoastat
