#pragma once

#include "radiant/kinematics.hpp"

#include <array>
#include <variant>
#include <vector>

namespace radiant {

/// A detection direction and frequency. theta is measured from the
/// surface normal, phi from the k0 direction.
struct EmissionQuery {
    double Omega;
    double theta;
    double phi;

    EmissionQuery(double Omega_, double theta_, double phi_);

    /// In-plane photon wavevector k = Omega sin(theta) (cos(phi), sin(phi)).
    std::array<double, 2> wavevector() const;
};

/// One cosine deformation mode h_i = d_i cos(q_i . x - omega_i t).
struct DiscreteMode {
    double amplitude;          // d_i > 0
    std::array<double, 2> q;   // in-plane wavevector
    double omega;              // > 0
};

/// Tabulated deformation spectral density s(q1, q2, omega) on a
/// rectilinear grid, normalized so that a single cosine mode corresponds
/// to a delta weight d^2/2 * (2 pi)^3 (per unit area and time). Values
/// between nodes are bilinear/trilinear (trapezoidal) interpolants.
class TabulatedDensity {
  public:
    TabulatedDensity(std::vector<double> q1_axis,
                     std::vector<double> q2_axis,
                     std::vector<double> omega_axis,
                     std::vector<double> density_row_major);

    double value(double q1, double q2, double omega) const;

    const std::vector<double>& q1_axis() const { return q1_; }
    const std::vector<double>& q2_axis() const { return q2_; }
    const std::vector<double>& omega_axis() const { return omega_; }
    double node(std::size_t i, std::size_t j, std::size_t k) const {
        return density_[(i * q2_.size() + j) * omega_.size() + k];
    }

  private:
    std::vector<double> q1_, q2_, omega_;
    std::vector<double> density_;  // row-major [q1][q2][omega]
};

using DeformationSpectrum = std::variant<std::vector<DiscreteMode>, TabulatedDensity>;

/// Response kernel of the two-point function,
///   R = (Omega/2 pi^3) (Omega^2 - k^2) sqrt((omega-Omega)^2 - (q-k)^2)
/// on its support, 0 outside. (Omega^2 - k^2) is evaluated as
/// Omega^2 cos^2(theta) to avoid cancellation near grazing incidence.
double kernel_R(const EmissionQuery& query, std::array<double, 2> q, double omega);

/// Photons radiated per unit time, area, solid angle (d cos theta d phi)
/// and frequency for the single-mode drive: the d^2/2 contraction of the
/// kernel with the traveling wave (k0, omega0).
double angular_power_mono(const MirrorDrive& drive, const EmissionQuery& query);

/// Generalized power density for an arbitrary deformation spectrum:
/// incoherent sum over discrete modes, or trapezoidal contraction of the
/// kernel with a tabulated density (divided by (2 pi)^3).
double angular_power_general(const DeformationSpectrum& spec, const EmissionQuery& query);

}  // namespace radiant
