#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "aoastat/types.hpp"
#include "aoastat/wind_data.hpp"

namespace aoastat {

enum class SynthKind {
    Gaussian,      ///< i.i.d. normal speed and direction (null model)
    Fbm,           ///< fractional Brownian speed path, sigma(tau) ~ tau^H
    Intermittent,  ///< lognormal-volatility process with heavy-tailed increments
};

SynthKind parse_synth_kind(const std::string& name);
const char* synth_kind_name(SynthKind kind);

/// Generator settings. Speeds are clipped at 0.1 m/s (counted on the
/// output series); keeping u_mean above ~5 u_sigma avoids clipping.
struct SynthSpec {
    SynthKind kind{SynthKind::Gaussian};
    Index n{0};
    Scalar rate{10};
    std::uint64_t seed{1};
    Scalar u_mean{8};
    Scalar u_sigma{1};
    Scalar hurst{1.0 / 3.0};     ///< fbm only, in (0, 1)
    Scalar vol_lambda{0};        ///< intermittent: lognormal log-volatility width
    Scalar dir_mean{270};        ///< base heading, deg
    Scalar dir_sigma{10};        ///< direction spread, deg
    Scalar dir_vol_lambda{0};    ///< intermittent: direction log-volatility width
    Scalar vol_time{1};          ///< intermittent: volatility decorrelation time, s
    Scalar revert_time{60};      ///< intermittent: mean-reversion time, s
    Scalar level_coupling{1};    ///< intermittent: volatility ~ (u/u_mean)^k, constant
                                 ///< turbulence intensity at k = 1

    void validate() const;
    std::string describe() const;  ///< key=value echo for headers/manifests
};

/// Dispatch on spec.kind. Identical specs (including seed) generate
/// bit-identical series.
WindSeries generate(const SynthSpec& spec);

WindSeries gen_gaussian(const SynthSpec& spec);
WindSeries gen_fbm(const SynthSpec& spec);
WindSeries gen_intermittent(const SynthSpec& spec);

/// Fractional Gaussian noise with unit per-step variance via the
/// Davies-Harte circulant embedding. Exposed for covariance checks.
/// Throws DataError when the embedding eigenvalues go negative.
ArrayX sample_fgn(Index n, Scalar hurst, std::mt19937_64& rng);

}  // namespace aoastat
