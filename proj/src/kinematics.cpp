#include "radiant/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radiant {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Absorb round-off before arcsin/arccos; genuinely out-of-range arguments
// stay out of range.
double clamp_unit(double x) {
    constexpr double tol = 1e-12;
    if (x > 1.0 && x <= 1.0 + tol) return 1.0;
    if (x < -1.0 && x >= -1.0 - tol) return -1.0;
    return x;
}

}  // namespace

MirrorDrive::MirrorDrive(double omega0_, double k0_, double d_)
    : omega0(omega0_), k0(k0_), d(d_) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("MirrorDrive: omega0 must be > 0");
    if (!(k0 >= 0.0)) throw std::invalid_argument("MirrorDrive: k0 must be >= 0");
    if (!(d > 0.0)) throw std::invalid_argument("MirrorDrive: d must be > 0");
}

std::string_view to_string(RegimeId id) {
    switch (id) {
        case RegimeId::R1: return "R1";
        case RegimeId::R2: return "R2";
        case RegimeId::R3: return "R3";
        case RegimeId::R4: return "R4";
        case RegimeId::R5: return "R5";
        case RegimeId::R6: return "R6";
        case RegimeId::R7: return "R7";
        case RegimeId::NoEmission: return "NoEmission";
    }
    return "NoEmission";
}

std::optional<RegimeId> regime_from_string(std::string_view s) {
    for (RegimeId id : {RegimeId::R1, RegimeId::R2, RegimeId::R3, RegimeId::R4,
                        RegimeId::R5, RegimeId::R6, RegimeId::R7, RegimeId::NoEmission})
        if (s == to_string(id)) return id;
    return std::nullopt;
}

std::optional<ReducedPoint> reduce(const MirrorDrive& drive, double Omega) {
    if (!(Omega > 0.0)) throw std::domain_error("reduce: Omega must be > 0");
    if (Omega > drive.omega0) return std::nullopt;
    return ReducedPoint{(drive.omega0 - Omega) / Omega, drive.k0 / Omega};
}

bool admissible(const MirrorDrive& drive, double Omega, double theta, double phi) {
    if (!(Omega < drive.omega0)) return false;
    const double s = std::sin(theta);
    const double lhs = (drive.omega0 - Omega) * (drive.omega0 - Omega);
    const double rhs = drive.k0 * drive.k0 + Omega * Omega * s * s -
                       2.0 * drive.k0 * Omega * s * std::cos(phi);
    return lhs > rhs;
}

RegimeId classify(const ReducedPoint& p) {
    const double r = p.r;
    const double k = p.kappa;
    if (r == 0.0) return RegimeId::NoEmission;  // Omega = omega0, empty window
    if (k >= 1.0 && r <= k - 1.0) return RegimeId::R5;
    if (r >= k + 1.0) return RegimeId::R4;
    if (r >= 1.0 - k && r >= k) return RegimeId::R3;
    if (k >= 1.0 && r <= k) return RegimeId::R6;
    if (k <= 1.0 && r >= 1.0 - k) return RegimeId::R2;
    if (r >= k && r <= 1.0 - k) return RegimeId::R7;
    return RegimeId::R1;
}

std::optional<SinThetaRoots> sin_theta_roots(const ReducedPoint& p, double phi) {
    const double sphi = std::sin(phi);
    const double disc = p.r * p.r - p.kappa * p.kappa * sphi * sphi;
    if (disc <= 0.0) return std::nullopt;
    const double root = std::sqrt(disc);
    const double mid = p.kappa * std::cos(phi);
    return SinThetaRoots{mid - root, mid + root};
}

std::optional<ThetaInterval> theta_bounds(const ReducedPoint& p, double phi) {
    const auto roots = sin_theta_roots(p, phi);
    if (!roots) return std::nullopt;
    if (roots->s_plus <= 0.0 || roots->s_minus >= 1.0) return std::nullopt;
    const double s_lo = std::max(roots->s_minus, 0.0);
    const double s_hi = std::min(roots->s_plus, 1.0);
    const double lo = std::asin(clamp_unit(s_lo));
    const double hi = std::asin(clamp_unit(s_hi));
    if (!(lo < hi)) return std::nullopt;
    return ThetaInterval{lo, hi};
}

std::optional<double> phi_critical(const ReducedPoint& p) {
    if (!(p.kappa > 0.0)) return std::nullopt;
    const double arg =
        clamp_unit((1.0 - p.r * p.r + p.kappa * p.kappa) / (2.0 * p.kappa));
    if (arg < -1.0 || arg > 1.0) return std::nullopt;
    return std::acos(arg);
}

std::optional<double> phi_max(const ReducedPoint& p) {
    if (!(p.kappa > 0.0) || p.r > p.kappa) return std::nullopt;
    return std::asin(clamp_unit(p.r / p.kappa));
}

bool AngularWindow::full_hemisphere() const {
    if (phi_intervals.size() != 1) return false;
    if (phi_intervals[0].lo != -kPi || phi_intervals[0].hi != kPi) return false;
    const auto b = bounds(kPi);  // most restrictive azimuth
    return b && b->lo == 0.0 && b->hi == kHalfPi;
}

std::optional<ThetaInterval> AngularWindow::bounds(double phi) const {
    if (phi_intervals.empty()) return std::nullopt;
    return theta_bounds(point, phi);
}

bool AngularWindow::contains(double theta, double phi) const {
    const auto b = bounds(phi);
    return b && theta > b->lo && theta < b->hi;
}

AngularWindow window(const ReducedPoint& p) {
    AngularWindow w;
    w.point = p;
    w.regime = classify(p);
    w.phi_c = phi_critical(p);
    w.phi_half_width = phi_max(p);
    if (p.kappa < 1.0) w.theta_beam = std::asin(p.kappa);

    if (w.regime == RegimeId::R5 || w.regime == RegimeId::NoEmission) {
        w.phi_c.reset();
        w.phi_half_width.reset();  // empty support has no half-width
        return w;
    }
    if (w.phi_half_width)
        w.phi_intervals.push_back({-*w.phi_half_width, *w.phi_half_width});
    else
        w.phi_intervals.push_back({-kPi, kPi});
    return w;
}

RegimeTrajectory trajectory(const MirrorDrive& drive, int resolution) {
    if (resolution < 2) throw std::invalid_argument("trajectory: resolution must be >= 2");
    RegimeTrajectory traj;
    const double w0 = drive.omega0;
    const double k0 = drive.k0;

    auto point_at = [&](double Omega) {
        return ReducedPoint{(w0 - Omega) / Omega, k0 / Omega};
    };

    if (k0 > 0.0 && w0 / k0 <= 1.0) {
        // Subluminal phase velocity: r < kappa - 1 everywhere, regime R5.
        traj.segments.push_back({0.0, w0, RegimeId::NoEmission});
    } else {
        // Boundary crossings of r(Omega) = w0/Omega - 1, kappa(Omega) = k0/Omega:
        //   r = kappa + 1  at Omega = (w0 - k0)/2
        //   r = kappa      at Omega = w0 - k0
        //   kappa = 1      at Omega = k0
        //   r = 1 - kappa  at Omega = (w0 + k0)/2
        // (r = kappa - 1 is never crossed for w0 > k0.)
        std::vector<double> cuts;
        for (double c : {0.5 * (w0 - k0), w0 - k0, k0, 0.5 * (w0 + k0)})
            if (c > 0.0 && c < w0) cuts.push_back(c);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        traj.crossings = cuts;

        std::vector<double> edges;
        edges.push_back(0.0);
        for (double c : cuts) edges.push_back(c);
        edges.push_back(w0);

        for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
            const double lo = edges[i];
            const double hi = edges[i + 1];
            const RegimeId id = classify(point_at(0.5 * (lo + hi)));
            if (!traj.segments.empty() && traj.segments.back().regime == id)
                traj.segments.back().omega_hi = hi;  // boundary with no regime change
            else
                traj.segments.push_back({lo, hi, id});
        }
    }

    for (const auto& seg : traj.segments) {
        for (int j = 0; j < resolution; ++j) {
            // Open sampling: segment endpoints sit on boundaries (or Omega = 0).
            const double t = (j + 0.5) / resolution;
            const double Omega = seg.omega_lo + t * (seg.omega_hi - seg.omega_lo);
            const ReducedPoint rp = point_at(Omega);
            traj.polyline.push_back({Omega, rp.kappa, rp.r, seg.regime});
        }
    }
    return traj;
}

}  // namespace radiant
