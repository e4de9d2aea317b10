#include "aoastat/stats_core.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "aoastat/angles.hpp"
#include "aoastat/errors.hpp"

namespace aoastat {

namespace {

/// tau as a whole number of sample periods; throws when not representable.
Index lag_steps(Scalar tau, Scalar rate, Index n) {
    if (!(rate > 0)) throw ConfigError("increments: series rate unset");
    const Scalar steps = tau * rate;
    const auto k = static_cast<Index>(std::llround(steps));
    if (k < 1 || std::abs(steps - static_cast<Scalar>(k)) > 1e-9)
        throw ConfigError("tau is not an integer multiple of the sample period");
    if (k >= n) throw ConfigError("tau reaches beyond the series duration");
    return k;
}

/// prefix[i] = number of invalid samples before index i.
std::vector<Index> invalid_prefix(const BoolArray& valid) {
    std::vector<Index> p(static_cast<std::size_t>(valid.size()) + 1, 0);
    for (Index i = 0; i < valid.size(); ++i)
        p[static_cast<std::size_t>(i) + 1] =
            p[static_cast<std::size_t>(i)] + (valid[i] ? 0 : 1);
    return p;
}

bool span_clean(const std::vector<Index>& prefix, Index i, Index k) {
    return prefix[static_cast<std::size_t>(i + k) + 1] == prefix[static_cast<std::size_t>(i)];
}

}  // namespace

Scalar Histogram::integral() const {
    Scalar acc = 0;
    for (Index i = 0; i < bins(); ++i) acc += density[i] * (edges[i + 1] - edges[i]);
    return acc;
}

IncrementSeries increments(const ArrayX& x, const BoolArray& valid, Scalar rate,
                           Scalar t0, Scalar tau, const std::string& source) {
    const Index n = x.size();
    const Index k = lag_steps(tau, rate, n);
    const auto prefix = invalid_prefix(valid);

    std::vector<Scalar> vals;
    std::vector<Scalar> times;
    vals.reserve(static_cast<std::size_t>(n - k));
    times.reserve(static_cast<std::size_t>(n - k));
    const bool angular = source == "direction";
    for (Index i = 0; i + k < n; ++i) {
        if (!span_clean(prefix, i, k)) continue;
        const Scalar d = x[i + k] - x[i];
        vals.push_back(angular ? wrap_delta_deg(d) : d);
        times.push_back(t0 + static_cast<Scalar>(i) / rate);
    }
    IncrementSeries out;
    out.tau = tau;
    out.source = source;
    out.values = Eigen::Map<const ArrayX>(vals.data(), static_cast<Index>(vals.size()));
    out.t = Eigen::Map<const ArrayX>(times.data(), static_cast<Index>(times.size()));
    return out;
}

IncrementSeries speed_increments(const WindSeries& series, Scalar tau) {
    return increments(series.u, series.valid, series.rate, series.t0, tau, "speed");
}

IncrementSeries direction_increments(const WindSeries& series, Scalar tau) {
    return increments(series.phi, series.valid, series.rate, series.t0, tau, "direction");
}

DistributionSummary moments(const ArrayX& values) {
    const Index n = values.size();
    if (n < 4) throw ConfigError("moments: need at least 4 samples");
    const Scalar mean = values.mean();
    const ArrayX d = values - mean;
    const auto nn = static_cast<Scalar>(n);
    const Scalar m2 = d.square().sum() / nn;
    if (!(m2 > 0)) throw DataError("moments: zero variance");
    const Scalar m3 = d.cube().sum() / nn;
    const Scalar m4 = d.square().square().sum() / nn;

    DistributionSummary s;
    s.n = n;
    s.sigma = std::sqrt(m2);
    s.nu = m3 / std::pow(m2, 1.5);
    s.gamma = m4 / (m2 * m2) - 3.0;
    return s;
}

Histogram estimate_pdf(const ArrayX& values, const HistogramPolicy& policy) {
    const Index n = values.size();
    const Index bins = policy.bins;
    if (bins < 1) throw ConfigError("estimate_pdf: need at least one bin");
    if (n < bins) throw DataError("estimate_pdf: fewer samples than bins");
    const Scalar mean = values.mean();
    const Scalar sigma = std::sqrt((values - mean).square().sum() / static_cast<Scalar>(n));
    const Scalar half = policy.span_sigmas * sigma;
    if (!(half > 0)) throw DataError("estimate_pdf: zero-width value range");

    Histogram h;
    h.edges = ArrayX::LinSpaced(bins + 1, mean - half, mean + half);
    h.density = ArrayX::Zero(bins);
    const Scalar lo = h.edges[0];
    const Scalar width = 2.0 * half / static_cast<Scalar>(bins);
    for (Index i = 0; i < n; ++i) {
        auto b = static_cast<Index>(std::floor((values[i] - lo) / width));
        b = std::clamp<Index>(b, 0, bins - 1);  // outliers land in the edge bins
        h.density[b] += 1.0;
    }
    h.density /= static_cast<Scalar>(n) * width;
    return h;
}

DistributionSummary describe(const ArrayX& values, const HistogramPolicy& policy) {
    DistributionSummary s = moments(values);
    s.histogram = estimate_pdf(values, policy);
    return s;
}

PowerLawFit powerlaw_fit(const ArrayX& taus, const ArrayX& ys, Scalar tau_lo, Scalar tau_hi) {
    if (taus.size() != ys.size()) throw ConfigError("powerlaw_fit: size mismatch");
    std::vector<Scalar> lx, ly;
    for (Index i = 0; i < taus.size(); ++i) {
        if (taus[i] < tau_lo || taus[i] > tau_hi) continue;
        if (!(ys[i] > 0))
            throw DataError("powerlaw_fit: nonpositive value inside the fit range");
        if (!(taus[i] > 0)) throw DataError("powerlaw_fit: nonpositive tau");
        lx.push_back(std::log(taus[i]));
        ly.push_back(std::log(ys[i]));
    }
    const auto n = static_cast<Index>(lx.size());
    if (n < 3) throw DataError("powerlaw_fit: need at least 3 points in range");

    Eigen::Map<const ArrayX> X(lx.data(), n), Y(ly.data(), n);
    const Scalar mx = X.mean(), my = Y.mean();
    const Scalar sxx = (X - mx).square().sum();
    if (!(sxx > 0)) throw DataError("powerlaw_fit: degenerate tau values");
    const Scalar sxy = ((X - mx) * (Y - my)).sum();
    const Scalar slope = sxy / sxx;
    const Scalar intercept = my - slope * mx;
    const Scalar ss_res = (Y - (intercept + slope * X)).square().sum();
    const Scalar ss_tot = (Y - my).square().sum();

    PowerLawFit fit;
    fit.exponent = slope;
    fit.prefactor = std::exp(intercept);
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    fit.tau_lo = tau_lo;
    fit.tau_hi = tau_hi;
    fit.n_points = n;
    return fit;
}

Scalar structure_function(const ArrayX& x, const BoolArray& valid, Scalar rate,
                          int order, Scalar tau) {
    if (order < 1) throw ConfigError("structure_function: order must be >= 1");
    const IncrementSeries inc = increments(x, valid, rate, 0.0, tau, "scalar");
    if (inc.size() == 0) throw DataError("structure_function: no admissible increments");
    return inc.values.pow(order).mean();
}

Scalar structure_function(const WindSeries& series, int order, Scalar tau) {
    return structure_function(series.u, series.valid, series.rate, order, tau);
}

std::vector<GdiSample> gdi(const WindSeries& series, Scalar tau) {
    // Joint admissibility: both channels share the validity mask, so the
    // two increment series align index-by-index.
    const IncrementSeries du = speed_increments(series, tau);
    const IncrementSeries dphi = direction_increments(series, tau);
    if (du.size() < 2) throw DataError("gdi: need at least 2 increment pairs");

    const Scalar max_u = du.values.abs().maxCoeff();
    const Scalar max_phi = dphi.values.abs().maxCoeff();
    if (!(max_u > 0)) throw DataError("gdi: all speed increments are zero");
    if (!(max_phi > 0)) throw DataError("gdi: all direction increments are zero");

    std::vector<GdiSample> out(static_cast<std::size_t>(du.size()));
    for (Index i = 0; i < du.size(); ++i)
        out[static_cast<std::size_t>(i)] = {
            du.t[i], std::abs(du.values[i]) / max_u + std::abs(dphi.values[i]) / max_phi};
    return out;
}

Scalar exceedance_probability(const ArrayX& values, Scalar threshold) {
    if (values.size() == 0) throw ConfigError("exceedance_probability: empty input");
    const Index count = (values >= threshold).count();
    return static_cast<Scalar>(count) / static_cast<Scalar>(values.size());
}

Scalar taylor_length(Scalar tau, Scalar u_mean) {
    if (!(u_mean > 0)) throw ConfigError("taylor_length: mean speed must be > 0");
    return u_mean * tau;
}

}  // namespace aoastat
