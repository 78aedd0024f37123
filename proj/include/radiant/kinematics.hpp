#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace radiant {

/// Harmonic traveling-wave deformation of the plate,
/// h(x, t) = d cos(k0 x1 - omega0 t), in natural units (c = 1).
/// The wavevector is taken along x1; only its magnitude matters.
struct MirrorDrive {
    double omega0;  // angular frequency, > 0
    double k0;      // in-plane wavenumber, >= 0
    double d;       // deformation amplitude, > 0

    MirrorDrive(double omega0_, double k0_, double d_);

    /// Second-order perturbation theory wants d*omega0 << 1. Callers
    /// should warn (not reject) when this returns false.
    bool perturbative() const { return d * omega0 < 0.1; }
};

/// Dimensionless coordinates of the emission-geometry plane:
/// r = (omega0 - Omega)/Omega is the cylinder radius, kappa = k0/Omega
/// the offset of its axis from the sphere center.
struct ReducedPoint {
    double r;
    double kappa;
};

/// The seven window topologies of the cylinder/sphere intersection, plus
/// a sentinel for Omega >= omega0 and degenerate empty windows (r = 0).
enum class RegimeId { R1, R2, R3, R4, R5, R6, R7, NoEmission };

std::string_view to_string(RegimeId id);
std::optional<RegimeId> regime_from_string(std::string_view s);

/// Nondimensionalize a detected frequency against a drive.
/// Returns nullopt for Omega > omega0 (no emission); throws
/// std::domain_error for Omega <= 0.
std::optional<ReducedPoint> reduce(const MirrorDrive& drive, double Omega);

/// Ground-truth emission predicate: true iff Omega < omega0 and
///   (omega0 - Omega)^2 > k0^2 + Omega^2 sin^2(theta)
///                        - 2 k0 Omega sin(theta) cos(phi).
/// Every window construction is validated against this inequality.
bool admissible(const MirrorDrive& drive, double Omega, double theta, double phi);

/// Regime of a reduced point. Predicates are evaluated in the fixed order
/// R5, R4, R3, R6, R2, R7, R1 with non-strict comparisons; boundaries are
/// measure zero and the label is reporting metadata only.
RegimeId classify(const ReducedPoint& p);

struct ThetaInterval {
    double lo;  // radians, 0 <= lo < hi <= pi/2
    double hi;
};

/// Roots of the admissibility quadratic in s = sin(theta) at fixed phi:
/// s^2 - 2 kappa cos(phi) s + (kappa^2 - r^2) < 0 for s in (s_minus, s_plus).
struct SinThetaRoots {
    double s_minus;
    double s_plus;
};

/// nullopt when the discriminant r^2 - kappa^2 sin^2(phi) <= 0.
std::optional<SinThetaRoots> sin_theta_roots(const ReducedPoint& p, double phi);

/// Admissible polar interval at azimuth phi, clamped to [0, pi/2].
/// Empty when no direction at this azimuth radiates.
std::optional<ThetaInterval> theta_bounds(const ReducedPoint& p, double phi);

/// Azimuth where the cylinder wall crosses the unit circle in the
/// theta = pi/2 plane: arccos[(1 - r^2 + kappa^2)/(2 kappa)].
/// Absent when the argument falls outside [-1, 1] or kappa = 0.
std::optional<double> phi_critical(const ReducedPoint& p);

/// Tangency azimuth arcsin(r/kappa) bounding the azimuthal support when
/// r <= kappa; absent when r > kappa (support is the full circle).
std::optional<double> phi_max(const ReducedPoint& p);

/// The full angular emission window of a reduced point: the azimuthal
/// support plus per-azimuth polar bounds, with the derived scalars used
/// for reporting. Symmetric under phi -> -phi by construction.
struct AngularWindow {
    ReducedPoint point{0.0, 0.0};
    RegimeId regime = RegimeId::NoEmission;

    struct PhiInterval {
        double lo;
        double hi;
    };
    /// Disjoint, sorted azimuthal support; a single symmetric interval
    /// ([-phi_max, phi_max] or the full circle) or empty.
    std::vector<PhiInterval> phi_intervals;

    std::optional<double> phi_c;
    std::optional<double> phi_half_width;  // phi_max when defined
    std::optional<double> theta_beam;      // arcsin(kappa) when kappa < 1

    bool empty() const { return phi_intervals.empty(); }
    bool full_hemisphere() const;

    /// Polar bounds at phi, empty outside the support.
    std::optional<ThetaInterval> bounds(double phi) const;
    /// Strict interior membership.
    bool contains(double theta, double phi) const;
};

AngularWindow window(const ReducedPoint& p);

/// Partition of (0, omega0) into regime intervals for a fixed drive,
/// with the boundary-crossing frequencies solved analytically and a
/// sampled (kappa, r) polyline per segment for plotting.
struct RegimeTrajectory {
    struct Segment {
        double omega_lo;
        double omega_hi;
        RegimeId regime;
    };
    struct Vertex {
        double omega;
        double kappa;
        double r;
        RegimeId regime;
    };

    std::vector<Segment> segments;   // tile (0, omega0), adjacent regimes distinct
    std::vector<double> crossings;   // every boundary hit in (0, omega0), sorted
    std::vector<Vertex> polyline;    // `resolution` samples per segment
};

RegimeTrajectory trajectory(const MirrorDrive& drive, int resolution = 16);

}  // namespace radiant
