#pragma once

#include <vector>

#include "willmore/solution.hpp"

namespace willmore::navier {

/// Clamped endpoints plus clamped endpoint curvatures.
struct Problem {
    Vec2 A;
    Vec2 B;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
};

/// The branch function f_{sigma1,sigma2,j}(kappa1, kappa2, a):
/// ceiling term times C minus the sign-dependent combination of
/// G-integrals of the scaled curvatures kappa_i / (sqrt2 a).
/// Throws std::domain_error for a below max(|kappa1|,|kappa2|)/sqrt2.
double branch_f(const BranchSpec& spec, double kappa1, double kappa2, double a);

/// 2 f^2 / a^2 + (kappa2-kappa1)^2 / a^4 - |B-A|^2; its roots in a
/// generate the (sigma1, sigma2, j)-type solutions.
double residual_a(const Problem& problem, const BranchSpec& spec, double a);

/// The a-interval [lo, hi] that provably contains every root of
/// residual_a for this branch.
struct ScanRange {
    double lo;
    double hi;
};
ScanRange scan_range(const Problem& problem, const BranchSpec& spec);

/// The unique rotation with Q w = chord. Throws std::domain_error when
/// the norms disagree beyond 1e-9 relative (w must already solve the
/// norm equation) or w vanishes.
Rot2 compute_Q(Vec2 w, Vec2 chord);

/// All (sigma1, sigma2, j)-type solutions: every admissible root of
/// residual_a on the scan range, built into verified solutions.
/// Throws std::invalid_argument when A == B (no closed Willmore curves).
std::vector<Solution> solve_branch(const Problem& problem, const BranchSpec& spec);

/// Complete catalog of the symmetric problem (kappa1 = kappa2 = kappa),
/// grouped into the F_k classes via the z-form equations; includes the
/// straight line when kappa = 0. k_max < 0 selects
/// max(2, ceil(|kappa| d / (2C)) + 1), which covers every class that can
/// fail to be generic plus one margin class.
std::vector<Solution> solve_symmetric_catalog(Vec2 A, Vec2 B, double kappa, int k_max = -1);

/// The minimal-energy solution of the symmetric problem.
Solution minimizer(Vec2 A, Vec2 B, double kappa);

/// Smallest j* >= 1 with
///   |B-A|^2 <= 4C^2 (j*-c)^2 / max(k1^2,k2^2) + 4(k2-k1)^2 / max(k1^4,k2^4),
/// c = 1/2 for sigma1 = sigma2 and c = 1 otherwise.
/// Throws std::domain_error when kappa1 == kappa2.
unsigned j0_star(const Problem& problem, int sigma1, int sigma2);

/// Scans j = 0..j_max, returns the minimal-a solution for each j from
/// the first nonempty index on; generating scales and energies increase
/// strictly along the returned list.
std::vector<Solution> solve_increasing(const Problem& problem, int sigma1, int sigma2,
                                       unsigned j_max);

} // namespace willmore::navier
