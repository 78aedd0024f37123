#pragma once

#include "radiant/kinematics.hpp"
#include "radiant/quadrature.hpp"

#include <vector>

namespace radiant {

/// One P(Omega) evaluation. `exact_zero` marks empty-window short-circuits
/// (no quadrature ran); `converged` is false when a subdivision budget was
/// exhausted, in which case `error` still reports the honest estimate.
struct DensityResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    bool exact_zero = false;
};

/// Photons per unit time, area and frequency at one Omega: the angular
/// power integrated in (mu = cos theta, phi) over the analytic window.
/// The inner integral runs in the arcsine variable of the window roots,
/// which removes the square-root edge singularity; the outer azimuthal
/// integral is split at phi_c where the polar bounds change character.
DensityResult spectral_density(const MirrorDrive& drive, double Omega,
                               const QuadratureConfig& cfg = {});

/// k0 = 0 reference: the azimuthal integral collapses and
///   P(Omega) = (d^2 Omega^4 / 2 pi^2) Int mu^2 sqrt(mu^2 - (1 - r^2)) dmu
/// over mu in (max(0, sqrt(1 - r^2)), 1]. Evaluated to 1e-10 relative
/// accuracy. Throws std::domain_error unless drive.k0 == 0.
double k0zero_reference(const MirrorDrive& drive, double Omega);

struct SpectrumSample {
    double Omega = 0.0;
    double P = 0.0;
    double error = 0.0;
    RegimeId regime = RegimeId::NoEmission;
    bool converged = true;
};

struct SpectrumCurve {
    double omega0 = 0.0;
    double k0 = 0.0;
    double d = 0.0;
    std::vector<SpectrumSample> samples;  // strictly increasing Omega in (0, omega0)

    /// Dimensionless view P/(d^2 omega0^4).
    double dimensionless(std::size_t i) const {
        return samples[i].P / (d * d * omega0 * omega0 * omega0 * omega0);
    }
};

/// Samples spectral_density on the uniform grid
/// Omega_i = omega0 (i+1)/(n_points+1), i = 0..n_points-1, which excludes
/// the endpoints and is symmetric about omega0/2. Points are evaluated in
/// parallel; the stored order is fixed by the grid index.
SpectrumCurve spectrum_sweep(const MirrorDrive& drive, int n_points,
                             const QuadratureConfig& cfg = {});

struct EnergyReport {
    double R_numeric = 0.0;       // Int Omega P(Omega) dOmega
    double R_closed = 0.0;        // (d^2 omega0/720 pi^2)(omega0^2 - k0^2)^{5/2}
    double N_numeric = 0.0;       // Int P(Omega) dOmega
    double N_rate = 0.0;          // (d^2/360 pi^2)(omega0^2 - k0^2)^{5/2}
    double mean_frequency = 0.0;  // R_numeric / N_numeric, 0 when no radiation
    double relative_mismatch = 0.0;
    double err_R = 0.0;
    double err_N = 0.0;
    bool converged = true;
};

double closed_form_R(const MirrorDrive& drive);
double closed_form_N_rate(const MirrorDrive& drive);

/// Integrates (P, Omega P) over (0, omega0) in one adaptive pass, split at
/// the trajectory's regime crossings. For omega0 <= k0 every entry is an
/// exact zero (empty-window short-circuit, no quadrature runs).
EnergyReport energy_report(const MirrorDrive& drive, const QuadratureConfig& cfg = {});

}  // namespace radiant
