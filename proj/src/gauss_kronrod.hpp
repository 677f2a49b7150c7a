#pragma once

#include <cmath>
#include <utility>

namespace willmore::detail {

// Adaptive Gauss(7)/Kronrod(15) quadrature for smooth integrands.
// Splits until the local |K15 - G7| estimate meets the budgeted tolerance.

inline constexpr double kGkAbscissa[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeight[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeight[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
std::pair<double, double> gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kKronrodWeight[7] * fc;
    double gauss = kGaussWeight[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kGkAbscissa[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kKronrodWeight[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeight[i / 2] * fsum;
    }
    kron *= h;
    gauss *= h;
    return {kron, std::fabs(kron - gauss)};
}

template <typename F>
double adaptive_gk(F&& f, double a, double b, double abs_tol, int depth = 0) {
    auto [value, err] = gk15(f, a, b);
    if (err <= abs_tol || depth >= 28) return value;
    const double c = 0.5 * (a + b);
    return adaptive_gk(f, a, c, 0.5 * abs_tol, depth + 1) +
           adaptive_gk(f, c, b, 0.5 * abs_tol, depth + 1);
}

} // namespace willmore::detail
