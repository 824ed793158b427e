// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef TTD_POWER_HPP
#define TTD_POWER_HPP

#include "ttd/array_model.hpp"

namespace ttd {

/// Component power model constants. Defaults correspond to a 3-bit
/// flash-converter chain at 4 GS/s in a 65 nm class process.
struct PowerParams {
    double fom_j = 96.1e-15;     // converter energy per conversion step
    int enob_bits = 3;           // effective resolution
    double fs_hz = 4e9;          // converter sampling rate
    double p_ota0_w = 9.7504e-13;// OTA power per antenna and Hz
    double p_des0_w = 0.512e-3;  // deserializer power per bit-lane
    double c_sw_f = 2.5e-12;     // interleaver switch capacitance
    double c_int_f = 0.6e-12;    // interleaver interconnect capacitance
    double v_dd = 1.0;           // supply

    void validate() const;
};

double adc_power(const PowerParams& p, int count);
double sca_power(const PowerParams& p, int n_rx, int n_subarrays, Architecture arch);
double agc_power(const PowerParams& p, Architecture arch, int n_rx, int n_subarrays);
double deserializer_power(const PowerParams& p, int enob_bits, int chains);
double interleaver_power(const PowerParams& p, int n_interleave);

struct PowerBreakdown {
    Architecture architecture = Architecture::Analog;
    double adc_w = 0.0;
    double sca_w = 0.0;
    double agc_w = 0.0;
    double deserializer_w = 0.0;
    double interleaver_w = 0.0;
    double total_w = 0.0;
};

/// Assembles the per-architecture baseband budget: one converter chain per
/// RF chain, delay front ends sized per sub-array, one time interleaver
/// for the delay-compensated architectures and none for the digital one.
/// The digital column keeps the delay-buffer row of the component table.
PowerBreakdown total_power(const SystemConfig& cfg, const PowerParams& p, Architecture arch);

} // namespace ttd

#endif
