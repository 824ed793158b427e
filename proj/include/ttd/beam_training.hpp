// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef TTD_BEAM_TRAINING_HPP
#define TTD_BEAM_TRAINING_HPP

#include <armadillo>
#include <vector>

#include "ttd/array_model.hpp"
#include "ttd/channel.hpp"
#include "ttd/impairments.hpp"

namespace ttd {

/// Beamforming-gain dictionary: entry (d, q) is the power gain of probing
/// beam d toward grid angle q. The grid is uniform in angle and avoids the
/// +-pi/2 endpoints by half a bin.
struct Dictionary {
    arma::mat b;        // n_dir x grid_size
    arma::vec grid;     // grid_size angles, rad
    arma::vec col_norm; // cached column norms
};

/// Dictionary over the canonical DFT probing beams.
Dictionary build_dictionary(const SystemConfig& cfg);

/// Dictionary over the codebook's realized per-set reference combiners;
/// this is what the estimation pipeline matches measured powers against.
Dictionary build_dictionary(const Codebook& cb);

/// Per-direction power estimates: mean |Y[m]|^2 over each pilot set.
/// Throws when the observation misses a mapped subcarrier.
arma::vec measure_direction_powers(const PilotObservation& obs, const SubcarrierMap& map);

struct EstimationResult {
    double aoa_rad = 0.0;
    arma::uword grid_index = 0; // 0-based into Dictionary::grid
    double score = 0.0;
};

/// Maximum-correlation angle estimate: the grid column whose normalized
/// profile best matches the measured powers. Ties break to the lowest
/// index; zero-norm columns are excluded.
EstimationResult estimate_aoa(const arma::vec& p_hat, const Dictionary& dict);

/// Closed-form expected direction powers for the given cluster statistics:
/// each cluster contributes its mean power, transmit-filtered through v,
/// at the grid angle nearest its arrival angle; plus the n_rx-fold noise
/// pedestal.
arma::vec expected_powers(const std::vector<Cluster>& clusters, const arma::cx_vec& v,
                          const Dictionary& dict, double sigma_n2, int n_rx);

/// Grid index (0-based) nearest to the given angle.
arma::uword nearest_grid_index(const Dictionary& dict, double theta_rad);

} // namespace ttd

#endif
