#pragma once

#include <cmath>
#include <vector>

namespace willmore::detail {

// Double-exponential (tanh-sinh) quadrature on a finite interval.
// Nodes are precomputed once per process. The integrand receives
// (t, t - a, b - t); the endpoint distances are formed without
// cancellation so inverse-square-root endpoint singularities are
// integrated at full precision.

struct TsNode {
    double tau;       // abscissa in [0,1), positive half only
    double weight;    // (pi/2) cosh(kh) / cosh^2((pi/2) sinh(kh))
    double one_minus; // 1 - tau, accurate
};

struct TsLevel {
    std::vector<TsNode> nodes; // level 0: k = 0,1,2,...; level l>0: odd k only
};

inline const std::vector<TsLevel>& ts_levels() {
    static const std::vector<TsLevel> levels = [] {
        constexpr int max_level = 9;
        constexpr double x_max = 4.0;
        const double half_pi = std::acos(-1.0) / 2.0;
        std::vector<TsLevel> out(max_level + 1);
        for (int level = 0; level <= max_level; ++level) {
            const double h = std::ldexp(1.0, -level);
            const int step = (level == 0) ? 1 : 2;
            const int k0 = (level == 0) ? 0 : 1;
            for (int k = k0; k * h <= x_max; k += step) {
                const double x = k * h;
                const double y = half_pi * std::sinh(x);
                const double e2 = std::exp(-2.0 * y);
                TsNode n;
                n.one_minus = 2.0 * e2 / (1.0 + e2);
                n.tau = 1.0 - n.one_minus;
                const double sech = 2.0 * std::exp(-y) / (1.0 + e2);
                n.weight = half_pi * std::cosh(x) * sech * sech;
                out[level].nodes.push_back(n);
            }
        }
        return out;
    }();
    return levels;
}

template <typename F>
double tanh_sinh(F&& f, double a, double b, double rel_tol = 5e-16) {
    if (a == b) return 0.0;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const auto& levels = ts_levels();

    auto eval_node = [&](const TsNode& n) -> double {
        double acc = 0.0;
        { // positive half: t close to b
            const double t = mid + half * n.tau;
            acc += n.weight * f(t, half * (1.0 + n.tau), half * n.one_minus);
        }
        if (n.tau > 0.0) { // negative half: t close to a
            const double t = mid - half * n.tau;
            acc += n.weight * f(t, half * n.one_minus, half * (1.0 + n.tau));
        }
        return acc;
    };

    double sum = 0.0;
    for (const auto& n : levels[0].nodes) sum += eval_node(n);
    double integral = sum; // h = 1 at level 0
    for (std::size_t level = 1; level < levels.size(); ++level) {
        const double h = std::ldexp(1.0, -static_cast<int>(level));
        double add = 0.0;
        for (const auto& n : levels[level].nodes) add += eval_node(n);
        const double next = 0.5 * integral + h * add;
        const double delta = std::fabs(next - integral);
        integral = next;
        if (level >= 3 && delta <= rel_tol * std::fabs(integral) + 1e-305) break;
    }
    return integral * half;
}

} // namespace willmore::detail
