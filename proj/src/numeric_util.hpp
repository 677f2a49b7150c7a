#pragma once

#include <cmath>

namespace willmore::detail {

inline int sign_of(double x) { return x >= 0.0 ? 1 : -1; } // sign(0) = +1 convention

// Ceiling with snapping: quotients that land within 1e-9 of an integer are
// treated as that integer, so phase ratios computed in floating point do not
// hop across a ceiling jump.
inline long ceil_snapped(double q) {
    const double r = std::round(q);
    if (std::fabs(q - r) < 1e-9) return static_cast<long>(r);
    return static_cast<long>(std::ceil(q));
}

} // namespace willmore::detail
