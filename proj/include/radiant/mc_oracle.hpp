#pragma once

#include "radiant/kinematics.hpp"

#include <cstdint>

namespace radiant {

/// Counter-based uniform stream: every (seed, index, dim) triple maps to
/// one double in [0, 1) through a SplitMix64-style finalizer, so samples
/// can be drawn in any order or split across workers without state.
struct CounterRng {
    std::uint64_t seed;

    double uniform(std::uint64_t index, std::uint32_t dim) const;
};

struct McConfig {
    long long sample_count = 1'000'000;
    std::uint64_t seed = 0;

    void validate() const;
};

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

/// Monte Carlo estimate of the solid-angle integral of the angular power:
/// uniform (mu, phi) over (0,1] x (-pi, pi], averaging 2 pi times the
/// pointwise power. Support is decided by the raw step functions of the
/// power formula; none of the analytic window geometry is used here.
/// Identical (seed, sample_count) reproduce bit-identical results for any
/// worker count.
McEstimate mc_oracle(const MirrorDrive& drive, double Omega, const McConfig& mc);

}  // namespace radiant
