#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>

namespace radiant {

/// Tolerances and limits for the adaptive integrators.
struct QuadratureConfig {
    double rel_tol = 1e-6;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    bool boundary_layer = true;  // endpoint u^2 substitution on/off

    void validate() const;
};

/// Result of one adaptive integration. `error` is the accumulated
/// Gauss-Kronrod error estimate; when the subdivision budget runs out
/// `converged` is false and `error` still reports the honest estimate.
struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

template <std::size_t N>
struct QuadResultN {
    std::array<double, N> value{};
    std::array<double, N> error{};
    int subdivisions = 0;
    bool converged = true;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (positive abscissae).
inline constexpr std::array<double, 8> kGk15Nodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kGk15KronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kGk15GaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

}  // namespace detail

/// Adaptive Gauss-Kronrod (15-point) integration of an N-component
/// integrand over [a, b]. Subdivides the interval with the largest error
/// first; the final value is the left-to-right sum over the partition so
/// the result does not depend on the subdivision schedule's tie-breaks.
template <std::size_t N>
QuadResultN<N> integrate_adaptive_n(const std::function<std::array<double, N>(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol, int max_subdivisions);

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double a, double b,
                              double rel_tol, double abs_tol, int max_subdivisions);

/// Same, but integrates g(u) du on both halves with the substitution
/// x = a + u^2 / x = b - u^2, which removes integrable sqrt(distance)
/// endpoint behavior. Safe for smooth endpoints too.
QuadResult integrate_adaptive_edges(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol, int max_subdivisions);

template <std::size_t N>
QuadResultN<N> integrate_adaptive_edges_n(const std::function<std::array<double, N>(double)>& f,
                                          double a, double b,
                                          double rel_tol, double abs_tol, int max_subdivisions);

}  // namespace radiant
