// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "ttd/hardware.hpp"

#include <cmath>
#include <stdexcept>

namespace ttd {

double max_delay_compensation(int n_interleave, double fs_hz)
{
    if (n_interleave < 1)
        throw std::invalid_argument("interleaving factor must be >= 1");
    if (fs_hz <= 0.0)
        throw std::invalid_argument("sampling rate must be positive");
    return (n_interleave - 1) / fs_hz;
}

int min_interleaving(int diversity, int n_antennas)
{
    if (diversity < 1 || n_antennas < 1)
        throw std::invalid_argument("diversity and antenna count must be >= 1");
    return 1 + 2 * diversity * (n_antennas - 1);
}

int max_diversity(double tc_max_s, double bw_hz, int n_antennas, bool power_of_two)
{
    if (tc_max_s <= 0.0 || bw_hz <= 0.0 || n_antennas < 1)
        throw std::invalid_argument("arguments must be positive");
    if (n_antennas == 1)
        return power_of_two ? 1 << 20 : (1 << 20); // delay range never binds
    // The small epsilon absorbs rounding in tc*bw for exact-ratio configs.
    const double raw = tc_max_s * bw_hz / (n_antennas - 1);
    const int r_raw = static_cast<int>(std::floor(raw + 1e-9));
    if (r_raw < 1)
        return 0;
    if (!power_of_two)
        return r_raw;
    int r = 1;
    while (2 * r <= r_raw)
        r *= 2;
    return r;
}

std::vector<SpecTableRow> spec_table(const std::vector<int>& diversity_orders, int n_rx,
                                     int n_sub, double bw_ghz)
{
    if (n_rx < 2 || n_sub < 2 || n_rx % n_sub != 0)
        throw std::invalid_argument("invalid array geometry");
    if (bw_ghz <= 0.0)
        throw std::invalid_argument("bandwidth must be positive");
    std::vector<SpecTableRow> rows;
    rows.reserve(diversity_orders.size());
    for (int r : diversity_orders) {
        if (r < 1)
            throw std::invalid_argument("diversity order must be >= 1");
        SpecTableRow row;
        row.diversity = r;
        row.delta_tau_ns = r / bw_ghz;
        row.analog_delay_ns = (n_rx - 1) * row.delta_tau_ns;
        row.hybrid_delay_ns = (n_sub - 1) * row.delta_tau_ns;
        row.analog_interleaving = min_interleaving(r, n_rx);
        row.hybrid_interleaving = min_interleaving(r, n_sub);
        rows.push_back(row);
    }
    return rows;
}

} // namespace ttd
