#include "radiant/radiance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radiant {

namespace {

constexpr double kTwoPiCubed = 2.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;

bool strictly_increasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
    return true;
}

// Index of the cell containing x, clamped to the grid. Returns false when
// x is outside the axis range.
bool locate(const std::vector<double>& axis, double x, std::size_t& i, double& frac) {
    if (x < axis.front() || x > axis.back()) return false;
    auto it = std::upper_bound(axis.begin(), axis.end(), x);
    i = static_cast<std::size_t>(it - axis.begin());
    if (i == 0) i = 1;
    if (i == axis.size()) i = axis.size() - 1;
    --i;
    frac = (x - axis[i]) / (axis[i + 1] - axis[i]);
    return true;
}

}  // namespace

EmissionQuery::EmissionQuery(double Omega_, double theta_, double phi_)
    : Omega(Omega_), theta(theta_), phi(phi_) {
    if (!(Omega > 0.0)) throw std::invalid_argument("EmissionQuery: Omega must be > 0");
    if (!(theta >= 0.0 && theta <= 0.5 * std::numbers::pi + 1e-12))
        throw std::invalid_argument("EmissionQuery: theta must lie in [0, pi/2]");
}

std::array<double, 2> EmissionQuery::wavevector() const {
    const double s = Omega * std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi)};
}

TabulatedDensity::TabulatedDensity(std::vector<double> q1_axis,
                                   std::vector<double> q2_axis,
                                   std::vector<double> omega_axis,
                                   std::vector<double> density_row_major)
    : q1_(std::move(q1_axis)),
      q2_(std::move(q2_axis)),
      omega_(std::move(omega_axis)),
      density_(std::move(density_row_major)) {
    if (q1_.size() < 2 || q2_.size() < 2 || omega_.size() < 2)
        throw std::invalid_argument("TabulatedDensity: every axis needs >= 2 points");
    if (!strictly_increasing(q1_) || !strictly_increasing(q2_) || !strictly_increasing(omega_))
        throw std::invalid_argument("TabulatedDensity: axes must be strictly increasing");
    if (density_.size() != q1_.size() * q2_.size() * omega_.size())
        throw std::invalid_argument("TabulatedDensity: density size does not match axes");
    for (double v : density_)
        if (!(v >= 0.0)) throw std::invalid_argument("TabulatedDensity: density must be >= 0");
}

double TabulatedDensity::value(double q1, double q2, double omega) const {
    std::size_t i, j, k;
    double fi, fj, fk;
    if (!locate(q1_, q1, i, fi) || !locate(q2_, q2, j, fj) || !locate(omega_, omega, k, fk))
        return 0.0;
    double acc = 0.0;
    for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj)
            for (int dk = 0; dk < 2; ++dk) {
                const double w = (di ? fi : 1.0 - fi) * (dj ? fj : 1.0 - fj) *
                                 (dk ? fk : 1.0 - fk);
                acc += w * node(i + static_cast<std::size_t>(di),
                                j + static_cast<std::size_t>(dj),
                                k + static_cast<std::size_t>(dk));
            }
    return acc;
}

double kernel_R(const EmissionQuery& query, std::array<double, 2> q, double omega) {
    if (!(omega > query.Omega)) return 0.0;
    if (query.theta >= 0.5 * std::numbers::pi) return 0.0;  // grazing: cos^2 factor
    const auto k = query.wavevector();
    const double dq0 = q[0] - k[0];
    const double dq1 = q[1] - k[1];
    const double arg = (omega - query.Omega) * (omega - query.Omega) - (dq0 * dq0 + dq1 * dq1);
    if (!(arg > 0.0)) return 0.0;
    const double mu = std::cos(query.theta);
    return (query.Omega / kTwoPiCubed) * (query.Omega * query.Omega * mu * mu) *
           std::sqrt(arg);
}

double angular_power_mono(const MirrorDrive& drive, const EmissionQuery& query) {
    return 0.5 * drive.d * drive.d *
           kernel_R(query, {drive.k0, 0.0}, drive.omega0);
}

double angular_power_general(const DeformationSpectrum& spec, const EmissionQuery& query) {
    if (const auto* modes = std::get_if<std::vector<DiscreteMode>>(&spec)) {
        for (std::size_t i = 0; i < modes->size(); ++i) {
            const auto& a = (*modes)[i];
            if (!(a.amplitude > 0.0) || !(a.omega > 0.0))
                throw std::invalid_argument("DiscreteMode: amplitude and omega must be > 0");
            for (std::size_t j = i + 1; j < modes->size(); ++j) {
                const auto& b = (*modes)[j];
                if (a.q == b.q && a.omega == b.omega)
                    throw std::invalid_argument(
                        "DiscreteMode: coinciding (q, omega) modes must be merged");
            }
        }
        // Cross terms between distinct modes live on disjoint delta
        // supports and vanish in the per-unit-area-and-time limit.
        double acc = 0.0;
        for (const auto& m : *modes)
            acc += 0.5 * m.amplitude * m.amplitude * kernel_R(query, m.q, m.omega);
        return acc;
    }

    const auto& tab = std::get<TabulatedDensity>(spec);
    const auto& q1 = tab.q1_axis();
    const auto& q2 = tab.q2_axis();
    const auto& om = tab.omega_axis();

    auto trap_w = [](const std::vector<double>& axis, std::size_t i) {
        if (i == 0) return 0.5 * (axis[1] - axis[0]);
        if (i + 1 == axis.size()) return 0.5 * (axis[i] - axis[i - 1]);
        return 0.5 * (axis[i + 1] - axis[i - 1]);
    };

    double acc = 0.0;
    for (std::size_t k = 0; k < om.size(); ++k) {
        if (!(om[k] > query.Omega)) continue;  // kernel support starts above Omega
        const double wk = trap_w(om, k);
        for (std::size_t i = 0; i < q1.size(); ++i) {
            const double wi = trap_w(q1, i);
            for (std::size_t j = 0; j < q2.size(); ++j) {
                const double s = tab.node(i, j, k);
                if (s == 0.0) continue;
                const double R = kernel_R(query, {q1[i], q2[j]}, om[k]);
                if (R == 0.0) continue;
                acc += wi * trap_w(q2, j) * wk * R * s;
            }
        }
    }
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    return acc / (kTwoPi * kTwoPi * kTwoPi);
}

}  // namespace radiant
