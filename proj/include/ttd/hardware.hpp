// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef TTD_HARDWARE_HPP
#define TTD_HARDWARE_HPP

#include <vector>

namespace ttd {

/// Delay-compensation hardware description of a switched-capacitor delay
/// front end.
struct HardwareSpec {
    double tc_max_s = 15e-9; // maximum delay compensation
    double f_clk_hz = 4e9;   // reference clock
};

/// Maximum delay compensation of an n_interleave-phase sampler.
double max_delay_compensation(int n_interleave, double fs_hz);

/// Smallest interleaving factor supporting diversity order r over
/// n_antennas delay-compensated elements at Nyquist sampling.
int min_interleaving(int diversity, int n_antennas);

/// Largest supported diversity order for the given delay-compensation
/// budget; 0 when even single-diversity training is infeasible. With
/// power_of_two set, rounds down to a power of two.
int max_diversity(double tc_max_s, double bw_hz, int n_antennas, bool power_of_two);

/// One row of the delay/interleaving requirement table.
struct SpecTableRow {
    int diversity = 0;
    double delta_tau_ns = 0.0;
    double analog_delay_ns = 0.0;
    int analog_interleaving = 0;
    double hybrid_delay_ns = 0.0;
    int hybrid_interleaving = 0;
};

/// Requirement table for the given diversity orders. Delays are computed
/// in nanoseconds from the bandwidth in GHz so table entries stay exact
/// for integer-ratio configurations.
std::vector<SpecTableRow> spec_table(const std::vector<int>& diversity_orders, int n_rx,
                                     int n_sub, double bw_ghz);

} // namespace ttd

#endif
