// SPDX-License-Identifier: Apache-2.0
//
// ttd-beamsim: true-time-delay array beam training simulator
// Copyright (c) 2026 ttd-beamsim contributors
//
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#ifndef TTD_RNG_HPP
#define TTD_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace ttd {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_keys(std::uint64_t a, std::uint64_t b)
{
    return splitmix64(a ^ splitmix64(b));
}

inline double to_unit_interval(std::uint64_t z)
{
    return static_cast<double>(z >> 11) * 0x1.0p-53; // [0, 1)
}

/// Counter-based draw of one standard circular complex Gaussian, E|z|^2 = 1.
/// The same (key, index) pair always yields the same value, independent of
/// how many other indices were evaluated. This is what keeps noise paired
/// between the quantized (full-band) and unquantized (pilot-only) front ends.
inline std::complex<double> counter_cgauss(std::uint64_t key, std::uint64_t index)
{
    const std::uint64_t z1 = splitmix64(key ^ splitmix64(2 * index + 1));
    const std::uint64_t z2 = splitmix64(key ^ splitmix64(2 * index + 2));
    const double u1 = 1.0 - to_unit_interval(z1); // (0, 1]
    const double u2 = to_unit_interval(z2);
    const double r = std::sqrt(-std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    return {r * std::cos(ang), r * std::sin(ang)};
}

/// Per-trial random substreams. Channel/noise draws are independent of the
/// impairment draws so that impaired and baseline runs share channels
/// (paired-seed trials).
struct TrialStreams {
    std::mt19937_64 channel;
    std::mt19937_64 impairment;
    std::uint64_t noise_key;
};

inline TrialStreams trial_streams(std::uint64_t base_seed, std::uint64_t trial)
{
    const std::uint64_t m = splitmix64(base_seed ^ splitmix64(trial));
    return TrialStreams{std::mt19937_64(splitmix64(m ^ 0x11C1ULL)),
                        std::mt19937_64(splitmix64(m ^ 0x22C2ULL)),
                        splitmix64(m ^ 0x33C3ULL)};
}

} // namespace ttd

#endif
