// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "ttd/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace ttd {

std::vector<Cluster> sample_clusters(std::mt19937_64& rng, const ChannelParams& params)
{
    if (params.n_clusters < 1)
        throw std::invalid_argument("need at least one cluster");
    if (params.dominance_db < 0.0)
        throw std::invalid_argument("dominance must be >= 0 dB");

    const int n_cl = params.n_clusters;
    const double dom = std::pow(10.0, params.dominance_db / 10.0);
    const double p_other = 1.0 / (dom + (n_cl - 1));

    const double lim = M_PI / 2.0 - params.angle_guard_rad;
    std::uniform_real_distribution<double> angle(-lim, lim);
    std::uniform_real_distribution<double> delay(0.0, params.delay_spread_s);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<Cluster> out(n_cl);
    for (int l = 0; l < n_cl; ++l) {
        Cluster& c = out[l];
        c.power = (l == 0) ? dom * p_other : p_other;
        c.aoa_rad = angle(rng);
        c.aod_rad = angle(rng);
        c.rays.resize(params.n_rays);
        const double ray_scale = std::sqrt(c.power / (2.0 * params.n_rays));
        for (Ray& ray : c.rays) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            ray.amplitude = {ray_scale * re, ray_scale * im};
            ray.delay_s = delay(rng);
        }
    }
    return out;
}

ChannelRealization make_realization(std::mt19937_64& rng, std::vector<Cluster> clusters,
                                    const SystemConfig& cfg, const ChannelParams& params)
{
    if (params.n_subbands < 1)
        throw std::invalid_argument("need at least one sub-band");

    ChannelRealization ch;
    ch.clusters = std::move(clusters);
    ch.n_subbands = params.n_subbands;
    ch.n_rx = cfg.n_rx;
    ch.n_tx = cfg.n_tx;
    const int n_cl = static_cast<int>(ch.clusters.size());
    ch.gains.set_size(n_cl, ch.n_subbands);
    ch.subband_freq.set_size(ch.n_subbands);

    for (int k = 0; k < ch.n_subbands; ++k)
        ch.subband_freq[k] = cfg.fc_hz - cfg.bw_hz / 2.0 + (k + 0.5) * cfg.bw_hz / ch.n_subbands;

    if (params.gain_model == GainModel::IidSubbands) {
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int l = 0; l < n_cl; ++l) {
            const double scale = std::sqrt(ch.clusters[l].power / 2.0);
            for (int k = 0; k < ch.n_subbands; ++k) {
                const double re = gauss(rng);
                const double im = gauss(rng);
                ch.gains(l, k) = {scale * re, scale * im};
            }
        }
        return ch;
    }

    for (int l = 0; l < n_cl; ++l)
        for (int k = 0; k < ch.n_subbands; ++k) {
            std::complex<double> g = 0.0;
            for (const Ray& ray : ch.clusters[l].rays)
                g += ray.amplitude * std::polar(1.0, -2.0 * M_PI * ch.subband_freq[k] * ray.delay_s);
            ch.gains(l, k) = g;
        }
    return ch;
}

int subband_of(int m, int n_subbands, int n_subcarriers)
{
    if (m < 1 || m > n_subcarriers)
        throw std::invalid_argument("subcarrier index out of range");
    const long long num = static_cast<long long>(m) * n_subbands;
    return static_cast<int>((num + n_subcarriers - 1) / n_subcarriers);
}

arma::cx_mat channel_matrix(const ChannelRealization& ch, int k)
{
    if (k < 1 || k > ch.n_subbands)
        throw std::invalid_argument("sub-band index out of range");
    arma::cx_mat h(ch.n_rx, ch.n_tx, arma::fill::zeros);
    for (std::size_t l = 0; l < ch.clusters.size(); ++l) {
        const Cluster& c = ch.clusters[l];
        h += ch.gains(l, k - 1) * steering_vector(c.aoa_rad, ch.n_rx) *
             steering_vector(c.aod_rad, ch.n_tx).t();
    }
    return h;
}

arma::cx_vec effective_channel(const ChannelRealization& ch, int k, const arma::cx_vec& v)
{
    if (k < 1 || k > ch.n_subbands)
        throw std::invalid_argument("sub-band index out of range");
    arma::cx_vec h(ch.n_rx, arma::fill::zeros);
    for (std::size_t l = 0; l < ch.clusters.size(); ++l) {
        const Cluster& c = ch.clusters[l];
        const std::complex<double> tx = arma::cdot(steering_vector(c.aod_rad, ch.n_tx), v);
        h += ch.gains(l, k - 1) * tx * steering_vector(c.aoa_rad, ch.n_rx);
    }
    return h;
}

arma::cx_mat effective_channel_all(const ChannelRealization& ch, const arma::cx_vec& v)
{
    arma::cx_mat h(ch.n_rx, ch.n_subbands, arma::fill::zeros);
    for (std::size_t l = 0; l < ch.clusters.size(); ++l) {
        const Cluster& c = ch.clusters[l];
        const std::complex<double> tx = arma::cdot(steering_vector(c.aod_rad, ch.n_tx), v);
        const arma::cx_vec a_rx = steering_vector(c.aoa_rad, ch.n_rx);
        for (int k = 0; k < ch.n_subbands; ++k)
            h.col(k) += ch.gains(l, k) * tx * a_rx;
    }
    return h;
}

arma::cx_vec precoder(const ChannelRealization& ch, int n_tx)
{
    if (ch.clusters.empty())
        throw std::invalid_argument("realization has no clusters");
    arma::cx_vec v = steering_vector(ch.clusters[0].aod_rad, n_tx);
    return v / arma::norm(v);
}

void dump_channel_csv(const ChannelRealization& ch, int trial, std::ostream& os, bool write_header)
{
    if (write_header) {
        os << "trial,subband,freq_hz";
        for (std::size_t l = 0; l < ch.clusters.size(); ++l)
            os << ",aoa_rad_" << l + 1 << ",aod_rad_" << l + 1 << ",gain_re_" << l + 1
               << ",gain_im_" << l + 1;
        os << "\n";
    }
    for (int k = 0; k < ch.n_subbands; ++k) {
        os << trial << "," << k + 1 << "," << ch.subband_freq[k];
        for (std::size_t l = 0; l < ch.clusters.size(); ++l)
            os << "," << ch.clusters[l].aoa_rad << "," << ch.clusters[l].aod_rad << ","
               << ch.gains(l, k).real() << "," << ch.gains(l, k).imag();
        os << "\n";
    }
}

} // namespace ttd
