#pragma once

#include <optional>
#include <string>

#include "willmore/curve.hpp"

namespace willmore {

/// Defect norms produced by independent re-verification of a solution.
struct ResidualReport {
    double endpoint = 0.0;   ///< worst |gamma(L) - B| over both reconstruction routes
    double r1 = 0.0;         ///< curvature (Navier) or tangent-angle (Dirichlet) defect at s=0
    double r2 = 0.0;         ///< same at s=L
    bool angles = false;     ///< r1/r2 are angles instead of curvatures
    double ode_defect = 0.0; ///< sup |kappa'' + kappa^3/2| / a^3 on a grid
    bool pass = false;
};

struct Solution {
    CurveParams params;
    std::optional<BranchSpec> branch; ///< absent for the straight line
    double energy = 0.0;
    double length = 0.0;
    SymmetryClass symmetry = SymmetryClass::Asymmetric;
    std::string class_label;    ///< "F2+" etc., set for symmetric Navier catalogs only
    bool boundary_case = false; ///< flags existence exactly on a class threshold
    ResidualReport residuals;
};

} // namespace willmore
