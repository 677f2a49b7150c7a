#pragma once

#include <optional>
#include <vector>

#include "willmore/geometry.hpp"

namespace willmore {

/// Generating data of a planar Willmore curve: arc-length curvature
/// kappa(s) = sqrt(2) a cn(a s + b), placed by the rotation Q and the
/// start point A. a = 0 encodes the straight segment (b is then unused).
struct CurveParams {
    double a = 0.0; ///< curvature scale, >= 0
    double b = 0.0; ///< cn phase in [-T/2, T/2)
    double L = 0.0; ///< arc length, > 0
    Rot2 Q;         ///< frame rotation
    Vec2 A;         ///< start point
};

/// Branch classification (sigma1, sigma2, j): phase signs at both ends
/// plus the number of whole periods traversed.
struct BranchSpec {
    int sigma1 = 1;
    int sigma2 = 1;
    unsigned j = 0;

    bool operator==(const BranchSpec&) const = default;
};

enum class SymmetryClass { AxiallySymmetric, PointwiseSymmetric, Asymmetric };

namespace curve {

/// kappa(s) = sqrt(2) a cn(a s + b); 0 identically for a = 0.
/// Throws std::domain_error for s outside [0, L].
double curvature(const CurveParams& p, double s);

/// kappa'(s) = -sqrt(2) a^2 sn(a s + b) dn(a s + b).
double curvature_derivative(const CurveParams& p, double s);

/// Unit tangent Q (cos Theta, sin Theta)(s) from the closed forms in
/// cn, sn, dn; no quadrature of kappa is involved.
Vec2 tangent_direction(const CurveParams& p, double s);

/// A + int_0^t tangent, by adaptive Gauss-Kronrod quadrature of the
/// closed-form tangent (one half-period per initial panel).
Vec2 position(const CurveParams& p, double t);

/// Chord vector in the unrotated frame, from the closed-form
/// antiderivatives; satisfies Q w = position(L) - A.
Vec2 endpoint_offset(const CurveParams& p);

/// Willmore energy (1/2) int kappa^2 = a^2 * alpha, closed form.
double energy(const CurveParams& p);

/// (sigma1, sigma2, j) of the curve; empty for the straight line.
std::optional<BranchSpec> classify_type(const CurveParams& p);

/// Axially/pointwise symmetric according to aL + 2b being an even/odd
/// multiple of T/2 within tol; tol < 0 selects 1e-9 (1 + |aL + 2b|).
SymmetryClass classify_symmetry(const CurveParams& p, double tol = -1.0);

/// Solves the curvature IVP: a = (kappa0^4/4 + kappa0'^2)^{1/4},
/// b = -sign(kappa0') cn^{-1}(kappa0 / (sqrt2 a)).
/// Throws std::domain_error when both inputs vanish.
struct IvpParams {
    double a;
    double b;
};
IvpParams from_ivp(double kappa0, double kappa0_prime);

struct SamplePoint {
    double s;
    Vec2 pos;
    double kappa;
};

/// n equally spaced arc-length samples over [0, L], endpoints included.
std::vector<SamplePoint> sample(const CurveParams& p, std::size_t n);

} // namespace curve
} // namespace willmore
