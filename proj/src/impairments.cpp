// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "ttd/impairments.hpp"

#include <cmath>
#include <stdexcept>

#include "ttd/rng.hpp"

namespace ttd {

void ImpairmentSpec::validate() const
{
    if (sigma_phase_rad < 0.0 || sigma_delay_s < 0.0)
        throw std::invalid_argument("impairment deviations must be >= 0");
    if (adc_bits < 0)
        throw std::invalid_argument("adc_bits must be >= 1, or 0 for an ideal converter");
    if (clip_scale <= 0.0)
        throw std::invalid_argument("clip_scale must be positive");
}

TapSet perturb_taps(const TapSet& taps, const ImpairmentSpec& spec, std::mt19937_64& rng)
{
    spec.validate();
    TapSet out = taps;
    if (taps.architecture == Architecture::Digital)
        return out;
    std::normal_distribution<double> gauss(0.0, 1.0);
    if (spec.sigma_phase_rad > 0.0)
        for (auto& p : out.phi_analog)
            p += spec.sigma_phase_rad * gauss(rng);
    if (spec.sigma_delay_s > 0.0)
        for (auto& t : out.tau_analog)
            t += spec.sigma_delay_s * gauss(rng);
    return out;
}

arma::cx_vec agc_normalize(const arma::cx_vec& samples)
{
    if (samples.n_elem == 0)
        throw std::invalid_argument("empty sample block");
    double acc = 0.0;
    for (const auto& z : samples)
        acc += std::norm(z);
    const double var = acc / (2.0 * samples.n_elem); // pooled per-axis variance
    if (var <= 0.0)
        throw std::invalid_argument("all-zero input, AGC gain undefined");
    return samples / std::sqrt(var);
}

arma::cx_vec quantize(const arma::cx_vec& samples, int bits, double clip_scale)
{
    if (bits == 0)
        return samples;
    if (bits < 1)
        throw std::invalid_argument("adc_bits must be >= 1");
    const double levels = std::pow(2.0, bits);
    const double step = 2.0 * clip_scale / levels;
    const double lo = -levels / 2.0;
    const double hi = levels / 2.0 - 1.0;
    auto q = [&](double u) {
        double cell = std::floor(u / step);
        cell = std::min(std::max(cell, lo), hi);
        return (cell + 0.5) * step;
    };
    arma::cx_vec out(samples.n_elem);
    for (arma::uword i = 0; i < samples.n_elem; ++i)
        out[i] = {q(samples[i].real()), q(samples[i].imag())};
    return out;
}

namespace {

// Per-antenna pilot spectrum value (signal only): unit-amplitude symbol on
// every pilot subcarrier, scaled by the arrays' aperture gain.
struct LinkContext {
    const SystemConfig& cfg;
    const arma::cx_mat& h_eff; // n_rx x n_subbands
    double noise_std;
    std::uint64_t noise_key;
    int n_subbands;

    std::complex<double> antenna_bin(int ant, int m) const
    {
        const int k = subband_of(m, n_subbands, cfg.n_subcarriers);
        return cfg.array_gain() * h_eff(ant, k - 1);
    }

    std::complex<double> noise_bin(int ant, int m) const
    {
        const auto idx = static_cast<std::uint64_t>(ant) * cfg.n_subcarriers + (m - 1);
        return noise_std * counter_cgauss(noise_key, idx);
    }
};

// Analog-domain combiner element for antenna i at offset f_off.
inline std::complex<double> analog_weight(const TapSet& t, int i, double f_off)
{
    return std::polar(1.0, -(2.0 * M_PI * f_off * t.tau_analog[i] + t.phi_analog[i]));
}

inline std::complex<double> digital_weight(const TapSet& t, int i, double f_off)
{
    return std::polar(1.0, -(2.0 * M_PI * f_off * t.tau_digital[i] + t.phi_digital[i]));
}

PilotObservation ideal_frontend(const Codebook& cb, const TapSet& taps, const LinkContext& lc)
{
    const SystemConfig& cfg = cb.cfg;
    const arma::uvec& pilots = cb.map.pilots;
    PilotObservation obs;
    obs.m = pilots;
    obs.y.zeros(pilots.n_elem);
    for (arma::uword p = 0; p < pilots.n_elem; ++p) {
        const int m = static_cast<int>(pilots[p]);
        const double f_off = subcarrier_offset_hz(m, cfg);
        std::complex<double> acc = 0.0;
        for (int i = 0; i < cfg.n_rx; ++i) {
            const auto w = analog_weight(taps, i, f_off) * digital_weight(taps, i, f_off);
            acc += std::conj(w) * (lc.antenna_bin(i, m) + lc.noise_bin(i, m));
        }
        obs.y[p] = acc;
    }
    return obs;
}

PilotObservation quantized_frontend(const Codebook& cb, const TapSet& taps,
                                    const ImpairmentSpec& spec, const LinkContext& lc)
{
    const SystemConfig& cfg = cb.cfg;
    const int m_tot = cfg.n_subcarriers;
    const int n_rx = cfg.n_rx;
    const double root_m = std::sqrt(double(m_tot));

    // Branch layout: 1 stream after full analog combining (analog), one per
    // sub-array (hybrid), one per antenna (digital).
    int n_branch = 1;
    int ants_per_branch = n_rx;
    if (cb.architecture == Architecture::Hybrid) {
        n_branch = cfg.n_subarrays();
        ants_per_branch = cfg.n_sub;
    } else if (cb.architecture == Architecture::Digital) {
        n_branch = n_rx;
        ants_per_branch = 1;
    }

    arma::uvec pilot_mask(m_tot, arma::fill::zeros);
    for (arma::uword i = 0; i < cb.map.pilots.n_elem; ++i)
        pilot_mask[cb.map.pilots[i] - 1] = 1;

    arma::cx_vec combined(m_tot, arma::fill::zeros);
    arma::cx_vec branch(m_tot);
    for (int b = 0; b < n_branch; ++b) {
        branch.zeros();
        for (int a = 0; a < ants_per_branch; ++a) {
            const int i = b * ants_per_branch + a;
            for (int m = 1; m <= m_tot; ++m) {
                const double f_off = subcarrier_offset_hz(m, cfg);
                std::complex<double> x = lc.noise_bin(i, m);
                if (pilot_mask[m - 1])
                    x += lc.antenna_bin(i, m);
                branch[m - 1] += std::conj(analog_weight(taps, i, f_off)) * x;
            }
        }
        // AGC and ADC act on the time-domain sample block of this branch.
        arma::cx_vec t = arma::ifft(branch) * root_m;
        t = agc_normalize(t);
        t = quantize(t, spec.adc_bits, spec.clip_scale);
        arma::cx_vec f = arma::fft(t) / root_m;
        // Digital delay/phase of the branch as an exact spectral ramp.
        const int rep = b * ants_per_branch; // taps constant within a branch
        for (int m = 1; m <= m_tot; ++m) {
            const double f_off = subcarrier_offset_hz(m, cfg);
            combined[m - 1] += std::conj(digital_weight(taps, rep, f_off)) * f[m - 1];
        }
    }

    PilotObservation obs;
    obs.m = cb.map.pilots;
    obs.y.set_size(obs.m.n_elem);
    for (arma::uword p = 0; p < obs.m.n_elem; ++p)
        obs.y[p] = combined[obs.m[p] - 1];
    return obs;
}

} // namespace

PilotObservation run_frontend(const Codebook& cb, const TapSet& actual_taps,
                              const ChannelRealization& ch, const arma::cx_vec& v,
                              const ImpairmentSpec& spec, double sigma_n2,
                              std::uint64_t noise_key)
{
    spec.validate();
    if (actual_taps.architecture != cb.architecture)
        throw std::invalid_argument("tap set architecture does not match the codebook");
    if (ch.n_rx != cb.cfg.n_rx || ch.n_tx != cb.cfg.n_tx)
        throw std::invalid_argument("channel realization does not match the configuration");
    if (sigma_n2 < 0.0)
        throw std::invalid_argument("noise variance must be >= 0");

    const arma::cx_mat h_eff = effective_channel_all(ch, v);
    const LinkContext lc{cb.cfg, h_eff, std::sqrt(sigma_n2), noise_key, ch.n_subbands};

    if (!spec.quantized())
        return ideal_frontend(cb, actual_taps, lc);
    return quantized_frontend(cb, actual_taps, spec, lc);
}

} // namespace ttd
