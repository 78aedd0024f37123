#include "radiant/mc_oracle.hpp"

#include "radiant/parallel.hpp"
#include "radiant/radiance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace radiant {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr long long kBlock = 1 << 16;

}  // namespace

double CounterRng::uniform(std::uint64_t index, std::uint32_t dim) const {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (2 * index + dim + 1);
    return static_cast<double>(mix64(z) >> 11) * 0x1.0p-53;
}

void McConfig::validate() const {
    if (sample_count < 10'000)
        throw std::invalid_argument("McConfig: sample_count must be >= 1e4");
}

McEstimate mc_oracle(const MirrorDrive& drive, double Omega, const McConfig& mc) {
    mc.validate();
    if (!(Omega > 0.0)) throw std::domain_error("mc_oracle: Omega must be > 0");

    McEstimate out;
    out.samples = mc.sample_count;
    if (Omega >= drive.omega0) return out;  // integrand identically zero

    const CounterRng rng{mc.seed};
    const long long n = mc.sample_count;
    const std::size_t blocks = static_cast<std::size_t>((n + kBlock - 1) / kBlock);
    std::vector<double> block_sum(blocks, 0.0);
    std::vector<double> block_sum_sq(blocks, 0.0);

    parallel_for_index(blocks, [&](std::size_t b) {
        const long long lo = static_cast<long long>(b) * kBlock;
        const long long hi = std::min(n, lo + kBlock);
        double s = 0.0, ss = 0.0;
        for (long long i = lo; i < hi; ++i) {
            const auto idx = static_cast<std::uint64_t>(i);
            const double mu = 1.0 - rng.uniform(idx, 0);            // (0, 1]
            const double phi = std::numbers::pi * (1.0 - 2.0 * rng.uniform(idx, 1));
            const double x =
                angular_power_mono(drive, EmissionQuery{Omega, std::acos(mu), phi});
            s += x;
            ss += x * x;
        }
        block_sum[b] = s;
        block_sum_sq[b] = ss;
    });

    // Fixed reduction order, independent of the worker count.
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        sum += block_sum[b];
        sum_sq += block_sum_sq[b];
    }

    const double nd = static_cast<double>(n);
    const double mean = sum / nd;
    const double var = std::max(0.0, (sum_sq - nd * mean * mean) / (nd - 1.0));
    constexpr double kMeasure = 2.0 * std::numbers::pi;  // (0,1] x (-pi,pi]
    out.estimate = kMeasure * mean;
    out.std_error = kMeasure * std::sqrt(var / nd);
    return out;
}

}  // namespace radiant
