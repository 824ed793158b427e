// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "ttd/beam_training.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace ttd {

namespace {

arma::vec make_grid(int q_count)
{
    arma::vec grid(q_count);
    for (int q = 0; q < q_count; ++q)
        grid[q] = -M_PI / 2.0 + (q + 0.5) * M_PI / q_count;
    return grid;
}

Dictionary dictionary_from_beams(const arma::cx_mat& beams, int n_rx, int q_count)
{
    Dictionary dict;
    dict.grid = make_grid(q_count);
    const int n_dir = static_cast<int>(beams.n_cols);
    dict.b.set_size(n_dir, q_count);
    for (int q = 0; q < q_count; ++q) {
        const arma::cx_vec a = steering_vector(dict.grid[q], n_rx);
        for (int d = 0; d < n_dir; ++d) {
            const std::complex<double> g = arma::cdot(beams.col(d), a);
            dict.b(d, q) = std::norm(g);
        }
    }
    dict.col_norm.set_size(q_count);
    for (int q = 0; q < q_count; ++q)
        dict.col_norm[q] = arma::norm(dict.b.col(q));
    return dict;
}

} // namespace

Dictionary build_dictionary(const SystemConfig& cfg)
{
    if (cfg.grid_size < cfg.n_dir)
        throw std::invalid_argument("grid must be at least as large as the direction count");
    arma::cx_mat beams(cfg.n_rx, cfg.n_dir);
    for (int d = 1; d <= cfg.n_dir; ++d)
        beams.col(d - 1) = dft_beam(d, cfg.n_dir, cfg.n_rx);
    return dictionary_from_beams(beams, cfg.n_rx, cfg.grid_size);
}

Dictionary build_dictionary(const Codebook& cb)
{
    return dictionary_from_beams(cb.set_beams, cb.cfg.n_rx, cb.cfg.grid_size);
}

arma::vec measure_direction_powers(const PilotObservation& obs, const SubcarrierMap& map)
{
    std::unordered_map<arma::uword, arma::uword> where;
    where.reserve(obs.m.n_elem);
    for (arma::uword i = 0; i < obs.m.n_elem; ++i)
        where[obs.m[i]] = i;

    arma::vec p(map.sets.size());
    for (std::size_t d = 0; d < map.sets.size(); ++d) {
        double acc = 0.0;
        for (arma::uword m : map.sets[d]) {
            const auto it = where.find(m);
            if (it == where.end())
                throw std::invalid_argument("observation is missing subcarrier " + std::to_string(m));
            acc += std::norm(obs.y[it->second]);
        }
        p[d] = acc / map.sets[d].n_elem;
    }
    return p;
}

EstimationResult estimate_aoa(const arma::vec& p_hat, const Dictionary& dict)
{
    if (p_hat.n_elem != dict.b.n_rows)
        throw std::invalid_argument("power vector length does not match the dictionary");
    if (!p_hat.is_finite())
        throw std::invalid_argument("power vector must be finite");

    const arma::vec corr = dict.b.t() * p_hat;
    double best = -std::numeric_limits<double>::infinity();
    arma::uword best_q = 0;
    bool found = false;
    for (arma::uword q = 0; q < corr.n_elem; ++q) {
        if (dict.col_norm[q] <= 0.0)
            continue;
        const double score = corr[q] / dict.col_norm[q];
        if (!found || score > best) {
            best = score;
            best_q = q;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("dictionary has no usable column");
    return EstimationResult{dict.grid[best_q], best_q, best};
}

arma::uword nearest_grid_index(const Dictionary& dict, double theta_rad)
{
    const auto q_count = static_cast<double>(dict.grid.n_elem);
    const double step = M_PI / q_count;
    double idx = std::floor((theta_rad + M_PI / 2.0) / step);
    idx = std::min(std::max(idx, 0.0), q_count - 1.0);
    return static_cast<arma::uword>(idx);
}

arma::vec expected_powers(const std::vector<Cluster>& clusters, const arma::cx_vec& v,
                          const Dictionary& dict, double sigma_n2, int n_rx)
{
    arma::vec p(dict.b.n_rows, arma::fill::zeros);
    for (const Cluster& c : clusters) {
        const std::complex<double> tx = arma::cdot(steering_vector(c.aod_rad, v.n_elem), v);
        const arma::uword q = nearest_grid_index(dict, c.aoa_rad);
        p += c.power * std::norm(tx) * dict.b.col(q);
    }
    p += double(n_rx) * sigma_n2;
    return p;
}

} // namespace ttd
