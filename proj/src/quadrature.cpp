#include "radiant/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace radiant {

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
    if (max_subdivisions < 10)
        throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 10");
}

namespace {

template <std::size_t N>
struct Panel {
    double a, b;
    std::array<double, N> value;
    double err;  // max over components of the scaled error
    std::array<double, N> err_raw;
};

template <std::size_t N>
Panel<N> gk15(const std::function<std::array<double, N>(double)>& f, double a, double b) {
    using detail::kGk15GaussW;
    using detail::kGk15KronrodW;
    using detail::kGk15Nodes;

    const double center = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    std::array<double, N> resg{}, resk{}, resabs{};
    std::array<std::array<double, N>, 15> fv{};

    for (int j = 0; j < 8; ++j) {
        const double dx = hlgth * kGk15Nodes[static_cast<std::size_t>(j)];
        if (j == 7) {
            fv[7] = f(center);
            for (std::size_t c = 0; c < N; ++c) {
                resk[c] += kGk15KronrodW[7] * fv[7][c];
                resabs[c] += kGk15KronrodW[7] * std::abs(fv[7][c]);
                resg[c] += kGk15GaussW[3] * fv[7][c];
            }
        } else {
            fv[static_cast<std::size_t>(j)] = f(center - dx);
            fv[static_cast<std::size_t>(14 - j)] = f(center + dx);
            for (std::size_t c = 0; c < N; ++c) {
                const double fsum = fv[static_cast<std::size_t>(j)][c] +
                                    fv[static_cast<std::size_t>(14 - j)][c];
                resk[c] += kGk15KronrodW[static_cast<std::size_t>(j)] * fsum;
                resabs[c] += kGk15KronrodW[static_cast<std::size_t>(j)] *
                             (std::abs(fv[static_cast<std::size_t>(j)][c]) +
                              std::abs(fv[static_cast<std::size_t>(14 - j)][c]));
                if (j % 2 == 1)
                    resg[c] += kGk15GaussW[static_cast<std::size_t>(j / 2)] * fsum;
            }
        }
    }

    Panel<N> p;
    p.a = a;
    p.b = b;
    for (std::size_t c = 0; c < N; ++c) {
        const double reskh = resk[c] * 0.5;
        double resasc = 0.0;
        for (int j = 0; j < 15; ++j) {
            const std::size_t w = static_cast<std::size_t>(j <= 7 ? j : 14 - j);
            resasc += kGk15KronrodW[w] * std::abs(fv[static_cast<std::size_t>(j)][c] - reskh);
        }
        resasc *= std::abs(hlgth);
        p.value[c] = resk[c] * hlgth;
        double err = std::abs((resk[c] - resg[c]) * hlgth);
        if (resasc != 0.0 && err != 0.0)
            err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
        const double round = 50.0 * std::numeric_limits<double>::epsilon() *
                             resabs[c] * std::abs(hlgth);
        p.err_raw[c] = std::max(err, round);
    }
    p.err = 0.0;
    return p;
}

template <std::size_t N>
void rescale_errors(std::vector<Panel<N>>& panels,
                    const std::array<double, N>& total,
                    double rel_tol, double abs_tol) {
    // Panel priority = worst component error relative to its tolerance.
    for (auto& p : panels) {
        double worst = 0.0;
        for (std::size_t c = 0; c < N; ++c) {
            const double tol = std::max(abs_tol, rel_tol * std::abs(total[c]));
            worst = std::max(worst, p.err_raw[c] / tol);
        }
        p.err = worst;
    }
}

}  // namespace

template <std::size_t N>
QuadResultN<N> integrate_adaptive_n(const std::function<std::array<double, N>(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol, int max_subdivisions) {
    QuadResultN<N> out;
    if (a == b) return out;

    std::vector<Panel<N>> panels;
    panels.push_back(gk15<N>(f, a, b));

    auto totals = [&panels]() {
        std::array<double, N> val{}, err{};
        for (const auto& p : panels)
            for (std::size_t c = 0; c < N; ++c) {
                val[c] += p.value[c];
                err[c] += p.err_raw[c];
            }
        return std::pair(val, err);
    };

    int subdivisions = 1;
    while (true) {
        auto [val, err] = totals();
        bool done = true;
        for (std::size_t c = 0; c < N; ++c)
            if (err[c] > std::max(abs_tol, rel_tol * std::abs(val[c]))) done = false;
        if (done) break;
        if (subdivisions >= max_subdivisions) {
            out.converged = false;
            break;
        }

        rescale_errors(panels, val, rel_tol, abs_tol);
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i) {
            if (panels[i].err > panels[worst].err ||
                (panels[i].err == panels[worst].err && panels[i].a < panels[worst].a))
                worst = i;
        }
        const Panel<N> p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (!(mid > p.a && mid < p.b)) {
            out.converged = false;  // interval too narrow to split further
            break;
        }
        panels[worst] = gk15<N>(f, p.a, mid);
        panels.push_back(gk15<N>(f, mid, p.b));
        ++subdivisions;
    }

    // Deterministic reduction: sum the final partition left to right.
    std::sort(panels.begin(), panels.end(),
              [](const Panel<N>& x, const Panel<N>& y) { return x.a < y.a; });
    for (const auto& p : panels)
        for (std::size_t c = 0; c < N; ++c) {
            out.value[c] += p.value[c];
            out.error[c] += p.err_raw[c];
        }
    out.subdivisions = subdivisions;
    return out;
}

template QuadResultN<1> integrate_adaptive_n<1>(const std::function<std::array<double, 1>(double)>&,
                                                double, double, double, double, int);
template QuadResultN<2> integrate_adaptive_n<2>(const std::function<std::array<double, 2>(double)>&,
                                                double, double, double, double, int);

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol, double abs_tol, int max_subdivisions) {
    auto fn = [&f](double x) { return std::array<double, 1>{f(x)}; };
    const auto r = integrate_adaptive_n<1>(fn, a, b, rel_tol, abs_tol, max_subdivisions);
    return QuadResult{r.value[0], r.error[0], r.subdivisions, r.converged};
}

template <std::size_t N>
QuadResultN<N> integrate_adaptive_edges_n(const std::function<std::array<double, N>(double)>& f,
                                          double a, double b,
                                          double rel_tol, double abs_tol, int max_subdivisions) {
    QuadResultN<N> out;
    if (!(b > a)) return out;
    const double mid = 0.5 * (a + b);

    // x = a + u^2 on the left half, x = b - u^2 on the right half.
    std::function<std::array<double, N>(double)> left = [&f, a](double u) {
        auto v = f(a + u * u);
        for (auto& c : v) c *= 2.0 * u;
        return v;
    };
    std::function<std::array<double, N>(double)> right = [&f, b](double u) {
        auto v = f(b - u * u);
        for (auto& c : v) c *= 2.0 * u;
        return v;
    };

    const auto rl = integrate_adaptive_n<N>(left, 0.0, std::sqrt(mid - a),
                                            rel_tol, 0.5 * abs_tol, max_subdivisions);
    const auto rr = integrate_adaptive_n<N>(right, 0.0, std::sqrt(b - mid),
                                            rel_tol, 0.5 * abs_tol, max_subdivisions);
    for (std::size_t c = 0; c < N; ++c) {
        out.value[c] = rl.value[c] + rr.value[c];
        out.error[c] = rl.error[c] + rr.error[c];
    }
    out.subdivisions = rl.subdivisions + rr.subdivisions;
    out.converged = rl.converged && rr.converged;
    return out;
}

template QuadResultN<1> integrate_adaptive_edges_n<1>(
    const std::function<std::array<double, 1>(double)>&, double, double, double, double, int);
template QuadResultN<2> integrate_adaptive_edges_n<2>(
    const std::function<std::array<double, 2>(double)>&, double, double, double, double, int);

QuadResult integrate_adaptive_edges(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol, int max_subdivisions) {
    auto fn = [&f](double x) { return std::array<double, 1>{f(x)}; };
    const auto r = integrate_adaptive_edges_n<1>(fn, a, b, rel_tol, abs_tol, max_subdivisions);
    return QuadResult{r.value[0], r.error[0], r.subdivisions, r.converged};
}

}  // namespace radiant
