// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef TTD_CHANNEL_HPP
#define TTD_CHANNEL_HPP

#include <armadillo>
#include <complex>
#include <ostream>
#include <random>
#include <vector>

#include "ttd/array_model.hpp"

namespace ttd {

/// How per-sub-band cluster gains are produced. `Rays` sums the cluster's
/// rays at the sub-band center frequency (gains correlate across nearby
/// sub-bands); `IidSubbands` draws each gain independently, which is the
/// assumption behind the closed-form expected-power model.
enum class GainModel { Rays, IidSubbands };

struct Ray {
    std::complex<double> amplitude;
    double delay_s = 0.0;
};

struct Cluster {
    double aoa_rad = 0.0;
    double aod_rad = 0.0;
    double power = 1.0; // mean squared gain
    std::vector<Ray> rays;
};

struct ChannelParams {
    int n_clusters = 3;
    double dominance_db = 10.0; // first cluster over each of the others
    int n_rays = 20;
    double delay_spread_s = 10e-9;
    int n_subbands = 64;
    double angle_guard_rad = 15.0 * M_PI / 180.0;
    GainModel gain_model = GainModel::Rays;
};

/// Clustered channel snapshot: cluster geometry plus one complex gain per
/// (cluster, sub-band). Frequency-flat within a sub-band.
struct ChannelRealization {
    std::vector<Cluster> clusters;
    int n_subbands = 0;
    int n_rx = 0;
    int n_tx = 0;
    arma::cx_mat gains;     // n_clusters x n_subbands
    arma::vec subband_freq; // absolute center frequency per sub-band
};

/// Draws cluster geometry and ray fading. Total power normalized to 1,
/// with the first cluster dominance_db above each of the others. Angles
/// are uniform inside the guarded range.
std::vector<Cluster> sample_clusters(std::mt19937_64& rng, const ChannelParams& params);

/// Evaluates per-sub-band gains for the given clusters. `IidSubbands`
/// consumes rng; `Rays` is deterministic given the clusters.
ChannelRealization make_realization(std::mt19937_64& rng, std::vector<Cluster> clusters,
                                    const SystemConfig& cfg, const ChannelParams& params);

/// Sub-band index of subcarrier m (both 1-based).
int subband_of(int m, int n_subbands, int n_subcarriers);

/// Full channel matrix of sub-band k (1-based).
arma::cx_mat channel_matrix(const ChannelRealization& ch, int k);

/// H[k] * v without forming H.
arma::cx_vec effective_channel(const ChannelRealization& ch, int k, const arma::cx_vec& v);

/// H[k] * v for every sub-band, one column per k.
arma::cx_mat effective_channel_all(const ChannelRealization& ch, const arma::cx_vec& v);

/// Unit-norm conjugate transmit beam toward the dominant cluster's
/// departure angle.
arma::cx_vec precoder(const ChannelRealization& ch, int n_tx);

/// One CSV record per (trial, sub-band) with cluster gains and angles.
void dump_channel_csv(const ChannelRealization& ch, int trial, std::ostream& os,
                      bool write_header = false);

} // namespace ttd

#endif
