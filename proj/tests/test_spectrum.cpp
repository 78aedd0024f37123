#include "radiant/spectrum.hpp"

#include "radiant/mc_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

using namespace radiant;

namespace {

// Monte Carlo golden for (omega0=1, k0=0.2, d=1) at Omega = 0.5, frozen
// from a 1e7-sample run (seed 20260810) before the quadrature existed:
//   estimate 6.473843990507e-04, standard error 2.719e-07.
constexpr double kGoldenP = 6.473843990507e-04;
constexpr double kGolden3Sigma = 8.157e-07;

}  // namespace

TEST_CASE("spectral_density reproduces the frozen Monte Carlo golden value") {
    const auto q = spectral_density(MirrorDrive{1.0, 0.2, 1.0}, 0.5);
    CHECK(q.converged);
    CHECK(std::abs(q.value - kGoldenP) <= kGolden3Sigma);
}

TEST_CASE("spectral_density: exact zeros, not small numbers") {
    const auto above = spectral_density(MirrorDrive{1.0, 0.6, 1.0}, 1.1);
    CHECK(above.exact_zero);
    CHECK(above.value == 0.0);
    CHECK(above.error == 0.0);

    const auto r5 = spectral_density(MirrorDrive{0.5, 1.0, 1.0}, 0.25);
    CHECK(r5.exact_zero);
    CHECK(r5.value == 0.0);

    const auto at_edge = spectral_density(MirrorDrive{1.0, 0.6, 1.0}, 1.0);
    CHECK(at_edge.exact_zero);
    CHECK(at_edge.value == 0.0);

    CHECK_THROWS_AS(spectral_density(MirrorDrive{1.0, 0.6, 1.0}, -0.5), std::domain_error);
}

TEST_CASE("spectral_density agrees with mc_oracle across regimes R1-R4, R6, R7") {
    // (drive, Omega) pairs chosen on the class trajectories.
    struct Pair {
        double omega0, k0, Omega;
        RegimeId expect;
    };
    const Pair pairs[] = {
        {1.0, 0.6, 0.90, RegimeId::R1}, {1.0, 0.6, 0.70, RegimeId::R2},
        {1.0, 0.6, 0.30, RegimeId::R3}, {1.0, 0.6, 0.10, RegimeId::R4},
        {1.0, 0.6, 0.50, RegimeId::R6}, {1.0, 0.2, 0.70, RegimeId::R7},
    };
    McConfig mc;
    mc.sample_count = 200000;
    mc.seed = 1234;
    for (const auto& pr : pairs) {
        const MirrorDrive drive{pr.omega0, pr.k0, 1.0};
        const auto p = reduce(drive, pr.Omega);
        REQUIRE(p.has_value());
        REQUIRE(classify(*p) == pr.expect);
        const auto est = mc_oracle(drive, pr.Omega, mc);
        const auto q = spectral_density(drive, pr.Omega);
        CHECK(q.converged);
        CHECK(std::abs(q.value - est.estimate) <= 3.0 * est.std_error);
    }
}

TEST_CASE("k0zero_reference: domain checks and limits") {
    CHECK_THROWS_AS(k0zero_reference(MirrorDrive{1.0, 0.2, 1.0}, 0.5), std::domain_error);
    CHECK_THROWS_AS(k0zero_reference(MirrorDrive{1.0, 0.0, 1.0}, 0.0), std::domain_error);
    CHECK(k0zero_reference(MirrorDrive{1.0, 0.0, 1.0}, 1.0) == 0.0);

    // Leading small-frequency behavior P ~ Omega^3 omega0 / (6 pi^2).
    const MirrorDrive drive{1.0, 0.0, 1.0};
    const double p3 = k0zero_reference(drive, 1e-3);
    const double p4 = k0zero_reference(drive, 1e-4);
    const double slope = std::log10(p3 / p4);
    CHECK(slope == doctest::Approx(3.0).epsilon(1e-3));
    CHECK(p3 == doctest::Approx(1e-9 / (6.0 * std::numbers::pi * std::numbers::pi))
                    .epsilon(1e-2));
}

TEST_CASE("k0=0: two independent integration paths agree to 1e-6 relative") {
    const MirrorDrive drive{1.0, 0.0, 1.0};
    for (double frac : {0.25, 0.5, 0.75}) {
        const double ref = k0zero_reference(drive, frac);
        const auto q = spectral_density(drive, frac);
        REQUIRE(ref > 0.0);
        CHECK(std::abs(q.value - ref) / ref < 1e-6);
    }
}

TEST_CASE("boundary-layer substitution can be disabled without changing values") {
    QuadratureConfig raw;
    raw.boundary_layer = false;
    raw.max_subdivisions = 4000;
    const MirrorDrive drive{1.0, 0.4, 1.0};
    const auto with_sub = spectral_density(drive, 0.35);
    const auto without = spectral_density(drive, 0.35, raw);
    CHECK(std::abs(with_sub.value - without.value) <=
          1e-7 * std::abs(with_sub.value));
}

TEST_CASE("spectrum_sweep: grid layout, symmetry about omega0/2, argmax at center") {
    const MirrorDrive drive{1.0, 0.2, 1.0};
    const auto curve = spectrum_sweep(drive, 101);
    REQUIRE(curve.samples.size() == 101);

    double maxP = 0.0;
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        const auto& s = curve.samples[i];
        CHECK(s.Omega == doctest::Approx((i + 1.0) / 102.0).epsilon(1e-15));
        if (i > 0) CHECK(s.Omega > curve.samples[i - 1].Omega);
        CHECK(s.P >= 0.0);
        CHECK(s.error >= 0.0);
        if (s.P > maxP) {
            maxP = s.P;
            argmax = i;
        }
        // grid symmetric about omega0/2
        const auto& m = curve.samples[curve.samples.size() - 1 - i];
        CHECK(s.Omega + m.Omega == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(s.P - m.P) <= 1e-3 * 6.5e-4);
    }
    CHECK(curve.samples[argmax].Omega == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(curve.dimensionless(argmax) == doctest::Approx(maxP).epsilon(1e-15));
    CHECK_THROWS_AS(spectrum_sweep(drive, 2), std::invalid_argument);
}

TEST_CASE("spectrum_sweep: regime labels follow the class-I partition") {
    // Grid at k/14, k=1..13, avoiding the crossings 0.2, 0.4, 0.6, 0.8.
    const auto curve = spectrum_sweep(MirrorDrive{1.0, 0.6, 1.0}, 13);
    const RegimeId expect[] = {RegimeId::R4, RegimeId::R4, RegimeId::R3, RegimeId::R3,
                               RegimeId::R3, RegimeId::R6, RegimeId::R6, RegimeId::R6,
                               RegimeId::R2, RegimeId::R2, RegimeId::R2, RegimeId::R1,
                               RegimeId::R1};
    REQUIRE(curve.samples.size() == 13);
    for (std::size_t i = 0; i < 13; ++i) {
        INFO("i=", i);
        CHECK(curve.samples[i].regime == expect[i]);
    }
}

TEST_CASE("subluminal drive: every sample is exactly zero") {
    const auto curve = spectrum_sweep(MirrorDrive{0.5, 1.0, 1.0}, 11);
    for (const auto& s : curve.samples) {
        CHECK(s.P == 0.0);
        CHECK(s.error == 0.0);
        CHECK(s.regime == RegimeId::R5);
    }
}

TEST_CASE("peak height increases with omega0/k0 and saturates at k0=0") {
    double prev = 0.0;
    for (double k0 : {0.6, 0.4, 0.2, 0.0}) {
        const double peak = spectral_density(MirrorDrive{1.0, k0, 1.0}, 0.5).value;
        CHECK(peak > prev);
        prev = peak;
    }
    CHECK(prev == doctest::Approx(1.0 / (128.0 * std::numbers::pi * std::numbers::pi))
                      .epsilon(1e-9));  // analytic k0=0 peak
}

TEST_CASE("energy_report: closed forms and conservation for the spec drives") {
    const auto zero = energy_report(MirrorDrive{1.0, 0.0, 1.0});
    CHECK(zero.R_closed == doctest::Approx(1.4072e-4).epsilon(1e-4));
    CHECK(zero.N_rate == doctest::Approx(2.8145e-4).epsilon(1e-4));
    CHECK(zero.relative_mismatch <= 5e-3);
    CHECK(zero.converged);

    const auto classI = energy_report(MirrorDrive{1.0, 0.6, 1.0});
    CHECK(classI.R_closed == doctest::Approx(4.611e-5).epsilon(1e-3));
    CHECK(classI.relative_mismatch <= 5e-3);

    const auto none = energy_report(MirrorDrive{0.5, 1.0, 1.0});
    CHECK(none.R_numeric == 0.0);
    CHECK(none.R_closed == 0.0);
    CHECK(none.N_numeric == 0.0);
    CHECK(none.N_rate == 0.0);
    CHECK(none.mean_frequency == 0.0);
    CHECK(none.relative_mismatch == 0.0);
}

TEST_CASE("energy_report: mean frequency and the rate identity") {
    for (double k0 : {0.6, 0.2}) {
        const auto rep = energy_report(MirrorDrive{1.0, k0, 1.0});
        CHECK(std::abs(rep.mean_frequency - 0.5) <= 1e-3);
        // R = (omega0/2) N is an exact consequence of the spectrum symmetry.
        const double budget = rep.err_R + 0.5 * rep.err_N + 1e-12 * rep.R_numeric;
        CHECK(std::abs(rep.R_numeric - 0.5 * rep.N_numeric) <= budget);
    }
}

TEST_CASE("P is continuous across the regime crossings of the class-I drive") {
    const MirrorDrive drive{1.0, 0.6, 1.0};
    const double maxP = spectral_density(drive, 0.5).value;
    for (double edge : {0.2, 0.4, 0.6, 0.8}) {
        const double lo = spectral_density(drive, edge - 1e-3).value;
        const double hi = spectral_density(drive, edge + 1e-3).value;
        CHECK(std::abs(hi - lo) <= 1e-2 * maxP);
    }
}

TEST_CASE("sweep results do not depend on the worker count") {
    const MirrorDrive drive{1.0, 0.6, 1.0};
    setenv("RADIANT_THREADS", "1", 1);
    const auto serial = spectrum_sweep(drive, 11);
    setenv("RADIANT_THREADS", "5", 1);
    const auto threaded = spectrum_sweep(drive, 11);
    unsetenv("RADIANT_THREADS");
    for (std::size_t i = 0; i < serial.samples.size(); ++i) {
        CHECK(serial.samples[i].P == threaded.samples[i].P);
        CHECK(serial.samples[i].error == threaded.samples[i].error);
    }
}

TEST_CASE("endpoint decay: P monotone in the outer five grid points") {
    const auto curve = spectrum_sweep(MirrorDrive{1.0, 0.4, 1.0}, 101);
    for (int i = 0; i < 5; ++i) {
        CHECK(curve.samples[static_cast<std::size_t>(i)].P <
              curve.samples[static_cast<std::size_t>(i + 1)].P);
        const std::size_t j = curve.samples.size() - 1 - static_cast<std::size_t>(i);
        CHECK(curve.samples[j].P < curve.samples[j - 1].P);
    }
}
