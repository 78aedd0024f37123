#include "radiant/spectrum.hpp"

#include "radiant/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radiant {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Inner polar integral at fixed phi, in the arcsine variable of the
// window roots. With s = m + h sin(t),
//   Int mu^2 sqrt(...) dmu = h^2 Int s sqrt(1 - s^2) cos^2(t) dt
// over the t-image of the clamped interval [s_lo, s_hi]; the sqrt edge
// factor becomes h cos(t) exactly, so only a clamp at s = 1 leaves a
// (integrable) sqrt(1 - s) endpoint for the edge substitution to absorb.
double inner_polar_integral(const ReducedPoint& p, double phi,
                            const QuadratureConfig& cfg,
                            double rel_tol, double& err_acc) {
    const auto roots = sin_theta_roots(p, phi);
    if (!roots) return 0.0;
    if (roots->s_plus <= 0.0 || roots->s_minus >= 1.0) return 0.0;

    const double m = 0.5 * (roots->s_minus + roots->s_plus);
    const double h = 0.5 * (roots->s_plus - roots->s_minus);
    const double s_lo = std::max(roots->s_minus, 0.0);
    const double s_hi = std::min(roots->s_plus, 1.0);
    if (!(s_hi > s_lo)) return 0.0;

    auto t_of = [m, h](double s) {
        const double x = std::clamp((s - m) / h, -1.0, 1.0);
        return std::asin(x);
    };
    const double t_lo = t_of(s_lo);
    const double t_hi = t_of(s_hi);

    auto f = [m, h](double t) {
        const double c = std::cos(t);
        const double s = m + h * std::sin(t);
        const double one_minus_s2 = std::max(0.0, (1.0 - s) * (1.0 + s));
        return s * std::sqrt(one_minus_s2) * h * h * c * c;
    };

    const QuadResult q =
        cfg.boundary_layer
            ? integrate_adaptive_edges(f, t_lo, t_hi, rel_tol, cfg.abs_tol,
                                       cfg.max_subdivisions)
            : integrate_adaptive(f, t_lo, t_hi, rel_tol, cfg.abs_tol,
                                 cfg.max_subdivisions);
    err_acc = std::max(err_acc, q.error);
    return q.value;
}

}  // namespace

DensityResult spectral_density(const MirrorDrive& drive, double Omega,
                               const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(Omega > 0.0)) throw std::domain_error("spectral_density: Omega must be > 0");

    DensityResult out;
    const auto reduced = reduce(drive, Omega);
    if (!reduced) {
        out.exact_zero = true;
        return out;
    }
    const AngularWindow win = window(*reduced);
    if (win.empty()) {
        out.exact_zero = true;
        return out;
    }

    const double prefactor =
        drive.d * drive.d * Omega * Omega * Omega * Omega / (4.0 * kPi * kPi * kPi);

    // Azimuthal panels: [0, phi_end] split at phi_c, doubled by symmetry.
    const double phi_end = win.phi_half_width ? *win.phi_half_width : kPi;
    std::vector<double> edges{0.0};
    if (win.phi_c && *win.phi_c > 0.0 && *win.phi_c < phi_end)
        edges.push_back(*win.phi_c);
    edges.push_back(phi_end);

    // Below ~1e-13 a relative demand on the inner pass is not meetable in
    // double precision; the error estimate still propagates to the caller.
    const double inner_rel = std::max(0.01 * cfg.rel_tol, 1e-13);
    double inner_err_max = 0.0;
    auto integrand = [&](double phi) {
        return inner_polar_integral(*reduced, phi, cfg, inner_rel, inner_err_max);
    };

    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const QuadResult q =
            cfg.boundary_layer
                ? integrate_adaptive_edges(integrand, edges[i], edges[i + 1],
                                           cfg.rel_tol, cfg.abs_tol,
                                           cfg.max_subdivisions)
                : integrate_adaptive(integrand, edges[i], edges[i + 1],
                                     cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
        value += q.value;
        error += q.error;
        out.converged = out.converged && q.converged;
    }

    out.value = 2.0 * prefactor * value;
    out.error = 2.0 * prefactor * (error + inner_err_max * phi_end);
    return out;
}

double k0zero_reference(const MirrorDrive& drive, double Omega) {
    if (drive.k0 != 0.0)
        throw std::domain_error("k0zero_reference: drive must have k0 = 0");
    if (!(Omega > 0.0)) throw std::domain_error("k0zero_reference: Omega must be > 0");
    if (Omega >= drive.omega0) return 0.0;

    const double r = (drive.omega0 - Omega) / Omega;
    const double a2 = 1.0 - r * r;  // may be negative (full cap)
    const double prefactor =
        drive.d * drive.d * Omega * Omega * Omega * Omega / (2.0 * kPi * kPi);

    constexpr double rel = 1e-11;
    constexpr double abs = 1e-300;
    constexpr int max_subdiv = 4000;

    if (a2 <= 0.0) {
        auto f = [a2](double mu) { return mu * mu * std::sqrt(mu * mu - a2); };
        return prefactor * integrate_adaptive(f, 0.0, 1.0, rel, abs, max_subdiv).value;
    }

    // mu = a + u^2 removes the sqrt(mu - a) edge at the cap boundary.
    const double a = std::sqrt(a2);
    auto f = [a](double u) {
        const double mu = a + u * u;
        return 2.0 * u * mu * mu * std::sqrt(u * u * (mu + a));
    };
    return prefactor *
           integrate_adaptive(f, 0.0, std::sqrt(1.0 - a), rel, abs, max_subdiv).value;
}

SpectrumCurve spectrum_sweep(const MirrorDrive& drive, int n_points,
                             const QuadratureConfig& cfg) {
    if (n_points < 3) throw std::invalid_argument("spectrum_sweep: n_points must be >= 3");
    cfg.validate();

    SpectrumCurve curve;
    curve.omega0 = drive.omega0;
    curve.k0 = drive.k0;
    curve.d = drive.d;
    curve.samples.resize(static_cast<std::size_t>(n_points));

    parallel_for_index(static_cast<std::size_t>(n_points), [&](std::size_t i) {
        const double Omega =
            drive.omega0 * (static_cast<double>(i) + 1.0) / (n_points + 1.0);
        const DensityResult dr = spectral_density(drive, Omega, cfg);
        auto& s = curve.samples[i];
        s.Omega = Omega;
        s.P = dr.value;
        s.error = dr.error;
        s.converged = dr.converged;
        const auto reduced = reduce(drive, Omega);
        s.regime = reduced ? classify(*reduced) : RegimeId::NoEmission;
    });
    return curve;
}

double closed_form_R(const MirrorDrive& drive) {
    if (drive.omega0 <= drive.k0) return 0.0;
    const double gap = drive.omega0 * drive.omega0 - drive.k0 * drive.k0;
    return drive.d * drive.d * drive.omega0 / (720.0 * kPi * kPi) * std::pow(gap, 2.5);
}

double closed_form_N_rate(const MirrorDrive& drive) {
    if (drive.omega0 <= drive.k0) return 0.0;
    const double gap = drive.omega0 * drive.omega0 - drive.k0 * drive.k0;
    return drive.d * drive.d / (360.0 * kPi * kPi) * std::pow(gap, 2.5);
}

EnergyReport energy_report(const MirrorDrive& drive, const QuadratureConfig& cfg) {
    cfg.validate();
    EnergyReport rep;
    rep.R_closed = closed_form_R(drive);
    rep.N_rate = closed_form_N_rate(drive);
    if (drive.omega0 <= drive.k0) return rep;  // no radiation, all zeros exact

    // P(Omega) is smooth inside each regime segment; split there.
    const RegimeTrajectory traj = trajectory(drive);
    QuadratureConfig point_cfg = cfg;
    point_cfg.rel_tol = std::max(0.01 * cfg.rel_tol, 1e-12);

    std::function<std::array<double, 2>(double)> f = [&](double Omega) {
        const double P = spectral_density(drive, Omega, point_cfg).value;
        return std::array<double, 2>{P, Omega * P};
    };

    for (const auto& seg : traj.segments) {
        if (seg.regime == RegimeId::NoEmission || seg.regime == RegimeId::R5) continue;
        const auto q = cfg.boundary_layer
                           ? integrate_adaptive_edges_n<2>(f, seg.omega_lo, seg.omega_hi,
                                                           cfg.rel_tol, cfg.abs_tol,
                                                           cfg.max_subdivisions)
                           : integrate_adaptive_n<2>(f, seg.omega_lo, seg.omega_hi,
                                                     cfg.rel_tol, cfg.abs_tol,
                                                     cfg.max_subdivisions);
        rep.N_numeric += q.value[0];
        rep.R_numeric += q.value[1];
        rep.err_N += q.error[0];
        rep.err_R += q.error[1];
        rep.converged = rep.converged && q.converged;
    }

    if (rep.N_numeric > 0.0) rep.mean_frequency = rep.R_numeric / rep.N_numeric;
    if (rep.R_closed > 0.0)
        rep.relative_mismatch = std::abs(rep.R_numeric - rep.R_closed) / rep.R_closed;
    return rep;
}

}  // namespace radiant
