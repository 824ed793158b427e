// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef TTD_ARRAY_MODEL_HPP
#define TTD_ARRAY_MODEL_HPP

#include <armadillo>
#include <string>
#include <vector>

namespace ttd {

enum class Architecture { Analog, Hybrid, Digital };

std::string to_string(Architecture a);
Architecture architecture_from_string(const std::string& s);

/// Scenario parameters. The single source of truth for one simulated link.
struct SystemConfig {
    double fc_hz = 60e9;      // carrier frequency
    double bw_hz = 2e9;       // bandwidth
    int n_subcarriers = 4096; // OFDM subcarriers across bw
    int n_tx = 128;           // transmit antennas
    int n_rx = 16;            // receive antennas
    int n_sub = 4;            // antennas per receive sub-array
    int n_dir = 32;           // simultaneously probed directions
    int diversity = 2;        // subcarriers mapped per direction
    int grid_size = 1024;     // estimation grid points
    double fs_hz = 4e9;       // baseband sampling rate
    double snr_db = -20.0;    // pre-beamforming SNR, total path power over noise

    int n_subarrays() const { return n_rx / n_sub; }
    double snr_linear() const { return std::pow(10.0, snr_db / 10.0); }
    /// Per-antenna complex noise variance for unit total channel power.
    double noise_variance() const { return 1.0 / snr_linear(); }
    /// Aperture gain of the full TX/RX arrays relative to the unit-norm
    /// steering convention used by the channel model.
    double array_gain() const { return std::sqrt(double(n_rx) * double(n_tx)); }

    /// Throws std::invalid_argument when a constraint is violated.
    void validate(bool hybrid_requested = true) const;
};

/// Per-antenna phase and delay settings of one codebook configuration.
/// Entries a given architecture does not implement are identically zero.
struct TapSet {
    Architecture architecture = Architecture::Analog;
    arma::vec phi_analog;  // rad
    arma::vec tau_analog;  // s
    arma::vec phi_digital; // rad
    arma::vec tau_digital; // s
};

/// Disjoint pilot subcarrier sets, one per probed direction.
/// All indices are 1-based, in [1, n_subcarriers].
struct SubcarrierMap {
    std::vector<arma::uvec> sets; // n_dir sets of diversity indices
    arma::uvec pilots;            // sorted union of all sets
};

using Combiner = arma::cx_vec;

/// Unit-norm spatial response of an n-element half-wavelength ULA.
arma::cx_vec steering_vector(double theta_rad, int n_antennas);

/// d-th column (1-based) of the D-point probing beam codebook.
arma::cx_vec dft_beam(int d, int n_dir, int n_rx);

/// Phase spacing used by the ideal taps of every architecture.
double codebook_phase_spacing(const SystemConfig& cfg);

/// Ideal tap settings realizing the frequency-dependent probing codebook
/// on the given architecture.
TapSet make_taps(const SystemConfig& cfg, Architecture arch);

/// Pilot subcarrier placement: diversity indices per direction, spread
/// uniformly across the band, first set anchored at subcarrier 1.
SubcarrierMap make_subcarrier_map(const SystemConfig& cfg);

/// Frequency of subcarrier m (1-based) relative to the carrier.
double subcarrier_offset_hz(int m, const SystemConfig& cfg);

/// Combiner w[m] produced by the given taps at subcarrier m (1-based).
/// Analog and digital parts compose as an elementwise product.
Combiner combiner_at(int m, const TapSet& taps, const SystemConfig& cfg);

/// One configured codebook: taps, pilot map and the per-set reference
/// combiners shared (up to subcarrier rounding) by all pilots of a set.
struct Codebook {
    SystemConfig cfg;
    Architecture architecture = Architecture::Analog;
    TapSet taps;
    SubcarrierMap map;
    arma::cx_mat set_beams; // n_rx x n_dir reference combiners
    double phase_spacing = 0.0;

    /// Index (1-based) of the DFT beam equal to set d's reference combiner,
    /// or 0 when the realized beam falls between DFT grid points.
    int dft_beam_index(int d) const;
};

Codebook make_codebook(const SystemConfig& cfg, Architecture arch);

} // namespace ttd

#endif
