#pragma once

#include <cstddef>
#include <vector>

#include "willmore/dirichlet.hpp"
#include "willmore/navier.hpp"
#include "willmore/solution.hpp"

namespace willmore::oracle {

struct Tolerances {
    double endpoint_rel = 1e-8; ///< times |B - A|
    double curvature = 1e-8;    ///< times max(1, a^2)
    double angle = 1e-8;        ///< radians
    double ode_defect = 1e-5;   ///< already scaled by a^3
};

/// Fixed-step RK4 integration of kappa'' = -kappa^3/2 from the given
/// initial data; returns the n+1 curvature samples on [0, L].
/// Throws std::invalid_argument for n < 16.
std::vector<double> integrate_curvature_ode(double kappa0, double kappa0_prime, double L,
                                            std::size_t n);

/// Recomputes the endpoint both by quadrature of the closed-form tangent
/// and by full ODE reconstruction, checks the curvature boundary values,
/// and measures the Willmore ODE defect of the closed-form curvature.
ResidualReport verify_navier(const navier::Problem& problem, const Solution& solution,
                             const Tolerances& tol = {});

/// Same, with tangent-angle boundary checks instead of curvatures.
ResidualReport verify_dirichlet(const dirichlet::Problem& problem, const Solution& solution,
                                const Tolerances& tol = {});

/// Independent recount of the roots of residual_a on the branch's scan
/// range: dense grid, sign changes plus endpoint and tangency roots.
/// Throws std::invalid_argument for samples < 10^4.
std::size_t sweep_count(const navier::Problem& problem, const BranchSpec& spec,
                        std::size_t samples = 10000);

} // namespace willmore::oracle
