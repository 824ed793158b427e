// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef TTD_IMPAIRMENTS_HPP
#define TTD_IMPAIRMENTS_HPP

#include <armadillo>
#include <cstdint>
#include <random>

#include "ttd/array_model.hpp"
#include "ttd/channel.hpp"

namespace ttd {

/// Hardware non-idealities applied to a receive front end.
/// adc_bits == 0 means an ideal (unquantized) converter chain, in which
/// case the AGC stage is bypassed as well.
struct ImpairmentSpec {
    double sigma_phase_rad = 0.0;
    double sigma_delay_s = 0.0;
    int adc_bits = 0;
    double clip_scale = 3.0; // full scale in per-axis standard deviations

    bool quantized() const { return adc_bits > 0; }
    void validate() const;
};

/// Gaussian perturbation of the analog phase and delay taps, centered on
/// the ideal values. Digital-domain taps are never touched; a Digital
/// architecture tap set passes through unchanged.
TapSet perturb_taps(const TapSet& taps, const ImpairmentSpec& spec, std::mt19937_64& rng);

/// Scales a sample block so the pooled per-axis (I/Q) variance equals 1.
/// Throws on all-zero input.
arma::cx_vec agc_normalize(const arma::cx_vec& samples);

/// Uniform mid-rise quantizer applied independently per axis: 2^bits
/// levels across [-clip_scale, clip_scale], saturating outside.
/// bits == 0 returns the input unchanged.
arma::cx_vec quantize(const arma::cx_vec& samples, int bits, double clip_scale);

/// Received pilot symbols, aligned with the subcarrier indices in `m`.
struct PilotObservation {
    arma::uvec m;   // 1-based subcarrier indices, ascending
    arma::cx_vec y; // Y[m]
};

/// Runs the receive front end of the codebook's architecture over one
/// channel realization: per-antenna reception, analog combining, the
/// architecture's AGC/ADC stage, digital delays/phases and final
/// combining. Quantization operates on time-domain sample blocks; with
/// adc_bits == 0 the converter chain is ideal and the observation equals
/// the direct frequency-domain evaluation of the combined link.
/// `actual_taps` may be a perturbed copy of the codebook's taps but must
/// belong to the same architecture.
PilotObservation run_frontend(const Codebook& cb, const TapSet& actual_taps,
                              const ChannelRealization& ch, const arma::cx_vec& v,
                              const ImpairmentSpec& spec, double sigma_n2,
                              std::uint64_t noise_key);

} // namespace ttd

#endif
