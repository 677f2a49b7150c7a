#pragma once

#include <optional>
#include <vector>

#include "willmore/solution.hpp"

namespace willmore::dirichlet {

/// Clamped endpoints plus clamped tangent angles (radians);
/// requires |theta2 - theta1| <= pi.
struct Problem {
    Vec2 A;
    Vec2 B;
    double theta1 = 0.0;
    double theta2 = 0.0;
};

struct Branch {
    int sigma1 = 1;
    int sigma2 = 1;
    unsigned j = 0;
    int eta = 1;
};

/// B - A expressed in the frame rotated by -theta1.
Vec2 chord_frame(const Problem& problem);

struct BranchEval {
    double zbar;
    double alpha_bar;
    double beta_bar;
};

/// zbar = eta sqrt(cos(theta2 - theta1 + sigma1 arccos z^2)) with the
/// ceiling-corrected alpha_bar and beta_bar = z - zbar. Empty when the
/// cosine is negative (z outside the branch's feasible set).
std::optional<BranchEval> branch_functions(double z, const Branch& branch, double theta1,
                                           double theta2);

/// All verified solutions of this branch: roots z in [-1,1] of the
/// chord-direction equation, restricted to the feasibility window and
/// the sigma-consistency constraints.
std::vector<Solution> solve_branch(const Problem& problem, const Branch& branch);

/// Union over the eight (sigma1, sigma2, eta) combinations and j <= j_max,
/// deduplicated and sorted by energy.
std::vector<Solution> enumerate(const Problem& problem, unsigned j_max);

} // namespace willmore::dirichlet
