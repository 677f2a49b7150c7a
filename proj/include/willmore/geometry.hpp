#pragma once

#include <cmath>

namespace willmore {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double angle() const { return std::atan2(y, x); }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

/// Rotation in SO(2), stored as (cos, sin) of the rotation angle.
/// Orthonormality and det = +1 hold by construction.
struct Rot2 {
    double c = 1.0;
    double s = 0.0;

    static Rot2 from_angle(double theta) { return {std::cos(theta), std::sin(theta)}; }

    Vec2 apply(Vec2 v) const { return {c * v.x - s * v.y, s * v.x + c * v.y}; }
    Vec2 apply_transposed(Vec2 v) const { return {c * v.x + s * v.y, -s * v.x + c * v.y}; }
    double angle() const { return std::atan2(s, c); }

    /// Row-major 2x2 entries.
    void to_matrix(double out[4]) const {
        out[0] = c;
        out[1] = -s;
        out[2] = s;
        out[3] = c;
    }
};

} // namespace willmore
