// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "ttd/array_model.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace ttd {

std::string to_string(Architecture a)
{
    switch (a) {
    case Architecture::Analog: return "analog";
    case Architecture::Hybrid: return "hybrid";
    case Architecture::Digital: return "digital";
    }
    return "?";
}

Architecture architecture_from_string(const std::string& s)
{
    if (s == "analog")
        return Architecture::Analog;
    if (s == "hybrid")
        return Architecture::Hybrid;
    if (s == "digital")
        return Architecture::Digital;
    throw std::invalid_argument("unknown architecture '" + s + "' (expected analog|hybrid|digital)");
}

void SystemConfig::validate(bool hybrid_requested) const
{
    if (fc_hz <= 0.0 || bw_hz <= 0.0)
        throw std::invalid_argument("carrier frequency and bandwidth must be positive");
    if (bw_hz >= 2.0 * fc_hz)
        throw std::invalid_argument("bandwidth must be below twice the carrier frequency");
    if (n_subcarriers < 2)
        throw std::invalid_argument("need at least 2 subcarriers");
    if (n_tx < 1 || n_rx < 1)
        throw std::invalid_argument("antenna counts must be >= 1");
    if (n_dir < 1)
        throw std::invalid_argument("number of probed directions must be >= 1");
    if (diversity < 1)
        throw std::invalid_argument("diversity order must be >= 1");
    if (static_cast<long long>(n_dir) * diversity > n_subcarriers)
        throw std::invalid_argument("n_dir * diversity exceeds the subcarrier count");
    if (fs_hz < 2.0 * bw_hz)
        throw std::invalid_argument("sampling rate must satisfy fs >= 2*bw");
    if (grid_size < n_dir)
        throw std::invalid_argument("estimation grid must have at least n_dir points");
    if (hybrid_requested && (n_sub < 1 || n_rx % n_sub != 0))
        throw std::invalid_argument("n_rx must be a multiple of the sub-array size");
}

arma::cx_vec steering_vector(double theta_rad, int n_antennas)
{
    if (!(std::abs(theta_rad) < M_PI / 2.0))
        throw std::invalid_argument("steering angle must lie in (-pi/2, pi/2)");
    if (n_antennas < 1)
        throw std::invalid_argument("need at least one antenna");
    arma::cx_vec a(n_antennas);
    const double scale = 1.0 / std::sqrt(double(n_antennas));
    const double step = -M_PI * std::sin(theta_rad);
    for (int n = 0; n < n_antennas; ++n)
        a[n] = std::polar(scale, step * n);
    return a;
}

arma::cx_vec dft_beam(int d, int n_dir, int n_rx)
{
    if (d < 1 || d > n_dir)
        throw std::invalid_argument("beam index out of range");
    arma::cx_vec f(n_rx);
    const double step = -2.0 * M_PI * (d - 1 - n_dir / 2.0) / n_dir;
    for (int n = 0; n < n_rx; ++n)
        f[n] = std::polar(1.0, step * n);
    return f;
}

double codebook_phase_spacing(const SystemConfig& cfg)
{
    // psi is the per-antenna phase at the first subcarrier, wrapped to
    // [-pi, pi). Reducing t modulo 1 before multiplying by 2*pi keeps the
    // value exact for configurations where t is an integer or half-integer.
    const double t = cfg.diversity * (cfg.fc_hz - cfg.bw_hz / 2.0) / cfg.bw_hz;
    double v = t + 0.5;
    v -= std::floor(v);
    const double psi = 2.0 * M_PI * v - M_PI;
    const double sgn = (psi > 0.0) ? 1.0 : (psi < 0.0 ? -1.0 : 0.0);
    return sgn * M_PI - psi;
}

TapSet make_taps(const SystemConfig& cfg, Architecture arch)
{
    cfg.validate(arch == Architecture::Hybrid);
    const int n = cfg.n_rx;
    const double dtau = cfg.diversity / cfg.bw_hz;
    const double dphi = codebook_phase_spacing(cfg);

    TapSet t;
    t.architecture = arch;
    t.phi_analog.zeros(n);
    t.tau_analog.zeros(n);
    t.phi_digital.zeros(n);
    t.tau_digital.zeros(n);

    switch (arch) {
    case Architecture::Analog:
        for (int i = 0; i < n; ++i) {
            t.phi_analog[i] = i * dphi;
            t.tau_analog[i] = i * dtau;
        }
        break;
    case Architecture::Hybrid:
        for (int i = 0; i < n; ++i) {
            const int coarse = (i / cfg.n_sub) * cfg.n_sub;
            t.phi_analog[i] = i * dphi;
            t.tau_analog[i] = (i - coarse) * dtau;
            t.tau_digital[i] = coarse * dtau;
        }
        break;
    case Architecture::Digital:
        for (int i = 0; i < n; ++i) {
            t.phi_digital[i] = i * dphi;
            t.tau_digital[i] = i * dtau;
        }
        break;
    }
    return t;
}

SubcarrierMap make_subcarrier_map(const SystemConfig& cfg)
{
    cfg.validate(false);
    const int d_count = cfg.n_dir;
    const int r_count = cfg.diversity;
    const double m1 = cfg.n_subcarriers - 1;

    SubcarrierMap map;
    map.sets.resize(d_count);
    std::set<arma::uword> seen;
    std::vector<arma::uword> all;
    all.reserve(static_cast<std::size_t>(d_count) * r_count);

    for (int d = 0; d < d_count; ++d) {
        arma::uvec idx(r_count);
        for (int r = 0; r < r_count; ++r) {
            const double u = double(d) / (double(d_count) * r_count) + double(r) / r_count;
            const auto m = static_cast<arma::uword>(1.0 + std::floor(m1 * u + 0.5));
            if (!seen.insert(m).second)
                throw std::invalid_argument(
                    "pilot index collision at subcarrier " + std::to_string(m) +
                    "; reduce n_dir * diversity relative to the subcarrier count");
            idx[r] = m;
            all.push_back(m);
        }
        map.sets[d] = idx;
    }
    map.pilots = arma::uvec(all);
    map.pilots = arma::sort(map.pilots);
    return map;
}

double subcarrier_offset_hz(int m, const SystemConfig& cfg)
{
    if (m < 1 || m > cfg.n_subcarriers)
        throw std::invalid_argument("subcarrier index out of range");
    return cfg.bw_hz * (double(m - 1) / (cfg.n_subcarriers - 1) - 0.5);
}

Combiner combiner_at(int m, const TapSet& taps, const SystemConfig& cfg)
{
    const double f_off = subcarrier_offset_hz(m, cfg);
    const int n = cfg.n_rx;
    if (static_cast<int>(taps.tau_analog.n_elem) != n)
        throw std::invalid_argument("tap set does not match the array size");
    Combiner w(n);
    for (int i = 0; i < n; ++i) {
        const double pa = 2.0 * M_PI * f_off * taps.tau_analog[i] + taps.phi_analog[i];
        const double pd = 2.0 * M_PI * f_off * taps.tau_digital[i] + taps.phi_digital[i];
        w[i] = std::polar(1.0, -(pa + pd));
    }
    return w;
}

int Codebook::dft_beam_index(int d) const
{
    if (d < 1 || d > cfg.n_dir)
        throw std::invalid_argument("direction index out of range");
    // set_beams.col(d-1)[n] = exp(j n chi_d); the DFT beam d' has increment
    // -2*pi*(d'-1-D/2)/D, so d' = 1 + D/2 - D*chi/(2*pi) modulo D.
    const double chi = M_PI * cfg.diversity - phase_spacing -
                       2.0 * M_PI * (d - 1) / cfg.n_dir;
    const double idx = cfg.n_dir / 2.0 - cfg.n_dir * chi / (2.0 * M_PI);
    const double wrapped = idx - cfg.n_dir * std::floor(idx / cfg.n_dir);
    const double nearest = std::floor(wrapped + 0.5);
    if (std::abs(wrapped - nearest) > 1e-9)
        return 0;
    return 1 + (static_cast<int>(nearest) % cfg.n_dir);
}

Codebook make_codebook(const SystemConfig& cfg, Architecture arch)
{
    Codebook cb;
    cb.cfg = cfg;
    cb.architecture = arch;
    cb.taps = make_taps(cfg, arch);
    cb.map = make_subcarrier_map(cfg);
    cb.phase_spacing = codebook_phase_spacing(cfg);
    cb.set_beams.set_size(cfg.n_rx, cfg.n_dir);
    for (int d = 0; d < cfg.n_dir; ++d) {
        // Reference combiner at the set's unrounded anchor position; every
        // pilot of the set realizes this beam up to rounding granularity.
        const double chi = M_PI * cfg.diversity - cb.phase_spacing -
                           2.0 * M_PI * d / cfg.n_dir;
        for (int n = 0; n < cfg.n_rx; ++n)
            cb.set_beams(n, d) = std::polar(1.0, chi * n);
    }
    return cb;
}

} // namespace ttd
