#include "willmore/navier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "numeric_util.hpp"
#include "willmore/elliptic.hpp"
#include "willmore/oracle.hpp"

namespace willmore::navier {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

struct FParts {
    double kt1, kt2; // kappa_i / (sqrt2 a), clamped to [-1,1]
    double u1, u2;   // inv_cn of the above
    long ceil_term;
    double f;
};

FParts f_parts(const BranchSpec& spec, double k1, double k2, double a) {
    const auto& kc = ell::constants();
    FParts p;
    p.kt1 = std::clamp(k1 / (kSqrt2 * a), -1.0, 1.0);
    p.kt2 = std::clamp(k2 / (kSqrt2 * a), -1.0, 1.0);
    p.u1 = ell::inv_cn(p.kt1);
    p.u2 = ell::inv_cn(p.kt2);
    const double q = (spec.sigma1 * p.u1 - spec.sigma2 * p.u2) / kc.T;
    p.ceil_term = detail::ceil_snapped(q);
    const double g1 = ell::seg_integral(p.kt1);
    const double g2 = ell::seg_integral(p.kt2);
    const double comb = (spec.sigma1 == spec.sigma2) ? (g1 - g2) : (g1 + g2);
    p.f = (static_cast<double>(spec.j) + static_cast<double>(p.ceil_term)) * kc.C -
          spec.sigma1 * comb;
    return p;
}

double a_floor(double k1, double k2) { return std::max(std::fabs(k1), std::fabs(k2)) / kSqrt2; }

double chord_length(const Problem& problem) {
    const double d = (problem.B - problem.A).norm();
    if (d == 0.0)
        throw std::invalid_argument("navier: A = B admits no solution; "
                                    "there are no closed Willmore curves");
    return d;
}

// sigma consistency where a scaled curvature sits on the corner +-1
bool corner_consistent(const BranchSpec& spec, const FParts& p) {
    constexpr double edge = 1.0 - 4e-13;
    if (p.kt1 >= edge && spec.sigma1 != 1) return false;
    if (p.kt1 <= -edge && spec.sigma1 != -1) return false;
    if (p.kt2 >= edge && spec.sigma2 != 1) return false;
    if (p.kt2 <= -edge && spec.sigma2 != -1) return false;
    return true;
}

double residual_from_parts(const FParts& p, double a, double dk, double d) {
    return 2.0 * p.f * p.f / (a * a) + dk * dk / (a * a * a * a) - d * d;
}

double residual_raw(const Problem& problem, const BranchSpec& spec, double a, double d) {
    const FParts p = f_parts(spec, problem.kappa1, problem.kappa2, a);
    return residual_from_parts(p, a, problem.kappa2 - problem.kappa1, d);
}

// Builds the verified Solution generated by the root a of residual_a.
// Returns an empty optional when the candidate violates a constraint
// line, degenerates to zero length, or fails type round-trip.
std::optional<Solution> build_solution(const Problem& problem, const BranchSpec& spec, double a) {
    const auto& kc = ell::constants();
    const double d = (problem.B - problem.A).norm();
    const FParts p = f_parts(spec, problem.kappa1, problem.kappa2, a);
    if (!corner_consistent(spec, p)) return std::nullopt;
    if (!(p.f > 0.0)) return std::nullopt;

    double b = spec.sigma1 * p.u1;
    if (b >= 0.5 * kc.T) b -= kc.T;
    const double btilde = spec.sigma2 * p.u2;
    const double m = static_cast<double>(spec.j) + static_cast<double>(p.ceil_term);
    const double aL = m * kc.T + btilde - b;
    if (!(aL > 1e-9)) return std::nullopt;

    CurveParams params;
    params.a = a;
    params.b = b;
    params.L = aL / a;
    params.A = problem.A;
    const Vec2 w = curve::endpoint_offset(params);
    params.Q = compute_Q(w, problem.B - problem.A);

    const auto type = curve::classify_type(params);
    if (!type || !(*type == spec)) return std::nullopt;

    Solution sol;
    sol.params = params;
    sol.branch = spec;
    sol.length = params.L;
    const double dk = problem.kappa2 - problem.kappa1;
    sol.energy = std::sqrt(std::max(a * a * a * a * d * d - dk * dk, 0.0));
    sol.symmetry = curve::classify_symmetry(params);
    sol.residuals = oracle::verify_navier(problem, sol);
    return sol;
}

double bisect(const Problem& problem, const BranchSpec& spec, double d, double lo, double hi,
              double rlo) {
    // residual is continuous on [lo, hi] (no ceiling jump inside)
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-13 * std::max(1.0, std::fabs(mid))) return mid;
        const double rm = residual_raw(problem, spec, mid, d);
        if (rm == 0.0) return mid;
        if ((rm > 0.0) == (rlo > 0.0)) {
            lo = mid;
            rlo = rm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// ternary refinement of the extremum of |residual| on [lo, hi]
std::pair<double, double> refine_extremum(const Problem& problem, const BranchSpec& spec, double d,
                                          double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        const double f1 = std::fabs(residual_raw(problem, spec, m1, d));
        const double f2 = std::fabs(residual_raw(problem, spec, m2, d));
        if (f1 < f2)
            hi = m2;
        else
            lo = m1;
    }
    const double mid = 0.5 * (lo + hi);
    return {mid, residual_raw(problem, spec, mid, d)};
}

long ceil_state(const Problem& problem, const BranchSpec& spec, double a) {
    return f_parts(spec, problem.kappa1, problem.kappa2, a).ceil_term;
}

// All roots of residual_a on the scan range: 4096-point sign scan with
// deadband, ceiling-jump split points, plus a tangency pass.
std::vector<double> scan_roots(const Problem& problem, const BranchSpec& spec) {
    const double d = chord_length(problem);
    const ScanRange range = scan_range(problem, spec);
    constexpr int N = 4096;
    const double tol_zero = 1e-10 * d * d;

    const double dk = problem.kappa2 - problem.kappa1;
    std::vector<double> xs(N + 1);
    std::vector<double> rs(N + 1);
    std::vector<long> cs(N + 1);
    std::vector<int> sg(N + 1);
    for (int i = 0; i <= N; ++i) {
        xs[i] = range.lo + (range.hi - range.lo) * (static_cast<double>(i) / N);
        const FParts p = f_parts(spec, problem.kappa1, problem.kappa2, xs[i]);
        rs[i] = residual_from_parts(p, xs[i], dk, d);
        cs[i] = p.ceil_term;
        sg[i] = (std::fabs(rs[i]) <= tol_zero) ? 0 : (rs[i] > 0.0 ? 1 : -1);
    }

    std::vector<double> roots;

    auto handle_crossing = [&](double lo, double hi, double rlo) {
        roots.push_back(bisect(problem, spec, d, lo, hi, rlo));
    };

    // zero runs (endpoint roots, grid hits, flat tangencies)
    int i = 0;
    while (i <= N) {
        if (sg[i] == 0) {
            int jend = i;
            while (jend + 1 <= N && sg[jend + 1] == 0) ++jend;
            double best = xs[i];
            double bestr = std::fabs(rs[i]);
            for (int t = i; t <= jend; ++t)
                if (std::fabs(rs[t]) < bestr) {
                    bestr = std::fabs(rs[t]);
                    best = xs[t];
                }
            roots.push_back(best);
            i = jend + 1;
        } else {
            ++i;
        }
    }

    for (int k = 0; k < N; ++k) {
        if (cs[k] != cs[k + 1]) {
            // locate the ceiling jump, then treat both sides separately
            double lo = xs[k];
            double hi = xs[k + 1];
            for (int it = 0; it < 80 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                if (ceil_state(problem, spec, mid) == cs[k])
                    lo = mid;
                else
                    hi = mid;
            }
            const double rl = residual_raw(problem, spec, lo, d);
            const double rr = residual_raw(problem, spec, hi, d);
            if (std::fabs(rl) <= tol_zero)
                roots.push_back(lo);
            else if (sg[k] != 0 && (rl > 0.0) != (rs[k] > 0.0))
                handle_crossing(xs[k], lo, rs[k]);
            if (std::fabs(rr) <= tol_zero)
                roots.push_back(hi);
            else if (sg[k + 1] != 0 && (rr > 0.0) != (rs[k + 1] > 0.0))
                handle_crossing(hi, xs[k + 1], rr);
            continue;
        }
        if (sg[k] != 0 && sg[k + 1] != 0 && sg[k] != sg[k + 1])
            handle_crossing(xs[k], xs[k + 1], rs[k]);
    }

    // tangency pass: same-sign local minima of |residual| dipping near zero
    for (int k = 1; k < N; ++k) {
        if (cs[k - 1] != cs[k] || cs[k] != cs[k + 1]) continue;
        if (sg[k - 1] == 0 || sg[k] == 0 || sg[k + 1] == 0) continue;
        if (sg[k - 1] != sg[k] || sg[k] != sg[k + 1]) continue;
        if (std::fabs(rs[k]) > std::fabs(rs[k - 1]) || std::fabs(rs[k]) > std::fabs(rs[k + 1]))
            continue;
        if (std::fabs(rs[k]) > 1e-5 * d * d) continue;
        const auto [ax, rx] = refine_extremum(problem, spec, d, xs[k - 1], xs[k + 1]);
        if (std::fabs(rx) <= tol_zero) roots.push_back(ax);
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 1e-11 * std::max(1.0, r)) out.push_back(r);
    return out;
}

} // namespace

double branch_f(const BranchSpec& spec, double kappa1, double kappa2, double a) {
    if (!(a > 0.0)) throw std::domain_error("branch_f: a must be positive");
    const double a0 = a_floor(kappa1, kappa2);
    if (a < a0 * (1.0 - 4e-16)) throw std::domain_error("branch_f: a below max|kappa_i|/sqrt2");
    return f_parts(spec, kappa1, kappa2, a).f;
}

double residual_a(const Problem& problem, const BranchSpec& spec, double a) {
    if (!(a > 0.0)) throw std::domain_error("residual_a: a must be positive");
    const double a0 = a_floor(problem.kappa1, problem.kappa2);
    if (a < a0 * (1.0 - 4e-16)) throw std::domain_error("residual_a: a below max|kappa_i|/sqrt2");
    return residual_raw(problem, spec, a, (problem.B - problem.A).norm());
}

ScanRange scan_range(const Problem& problem, const BranchSpec& spec) {
    const double d = chord_length(problem);
    const double a0 = a_floor(problem.kappa1, problem.kappa2);
    // f <= (j+2)C pointwise and (kappa2-kappa1)^2/a^2 <= psi^2 for a >= a0,
    // so every root obeys a <= a0 + hypot(sqrt2 (j+2) C, psi) / d.
    const double fmax = (spec.j + 2.0) * ell::constants().C;
    const double psi = a0 > 0.0 ? (problem.kappa2 - problem.kappa1) / a0 : 0.0;
    const double hi = a0 + std::hypot(kSqrt2 * fmax, psi) / d;
    const double lo = a0 > 0.0 ? a0 : hi * 1e-9;
    return {lo, hi};
}

Rot2 compute_Q(Vec2 w, Vec2 chord) {
    const double nw = w.norm();
    const double nc = chord.norm();
    if (nw == 0.0 || nc == 0.0) throw std::domain_error("compute_Q: zero-length vector");
    if (std::fabs(nw - nc) > 1e-9 * nc)
        throw std::domain_error("compute_Q: |w| and |chord| disagree beyond tolerance");
    return Rot2::from_angle(chord.angle() - w.angle());
}

std::vector<Solution> solve_branch(const Problem& problem, const BranchSpec& spec) {
    chord_length(problem);
    std::vector<Solution> out;
    for (double a : scan_roots(problem, spec)) {
        auto sol = build_solution(problem, spec, a);
        if (sol) out.push_back(std::move(*sol));
    }
    std::sort(out.begin(), out.end(),
              [](const Solution& x, const Solution& y) { return x.params.a < y.params.a; });
    return out;
}

namespace {

// ---- symmetric catalog -------------------------------------------------

struct CatalogEntry {
    int k;
    Solution sol;
};

double rhs_increasing(double z, double kC) { // 2z(kC - 2G(z)), the (sgn,-sgn,k-1) form
    return 2.0 * z * (kC - 2.0 * ell::seg_integral(z));
}

double rhs_concave(double z, double kC) { // 2z(kC + 2G(z)), the (-sgn,sgn,k) form
    return 2.0 * z * (kC + 2.0 * ell::seg_integral(z));
}

template <typename F>
double bisect_level(F&& f, double level, double lo, double hi, bool increasing) {
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool below = f(mid) < level;
        if (below == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

void push_entry(std::vector<CatalogEntry>& out, const Problem& prob, const BranchSpec& spec,
                double a, int k, const std::string& label, bool boundary) {
    auto sol = build_solution(prob, spec, a);
    if (!sol) return;
    sol->class_label = label;
    sol->boundary_case = boundary;
    out.push_back({k, std::move(*sol)});
}

std::string class_label(int k, int sign) {
    std::string s = "F" + std::to_string(k);
    if (sign > 0) s += "+";
    if (sign < 0) s += "-";
    return s;
}

Solution straight_line_solution(Vec2 A, Vec2 B) {
    const double d = (B - A).norm();
    Solution line;
    line.params.a = 0.0;
    line.params.b = 0.0;
    line.params.L = d;
    line.params.A = A;
    line.params.Q = compute_Q({d, 0.0}, B - A);
    line.branch = std::nullopt;
    line.energy = 0.0;
    line.length = d;
    line.symmetry = SymmetryClass::AxiallySymmetric;
    line.class_label = "F0";
    line.residuals = oracle::verify_navier({A, B, 0.0, 0.0}, line);
    return line;
}

} // namespace

std::vector<Solution> solve_symmetric_catalog(Vec2 A, Vec2 B, double kappa, int k_max) {
    const Problem prob{A, B, kappa, kappa};
    const double d = chord_length(prob);
    const double C = ell::constants().C;
    const double abs_k = std::fabs(kappa);
    const double level = abs_k * d;
    const int sgn = detail::sign_of(kappa);
    if (k_max < 0)
        k_max = std::max(2, static_cast<int>(std::ceil(level / (2.0 * C))) + 1);

    std::vector<CatalogEntry> entries;

    if (kappa == 0.0) {
        // class 0: straight line plus one curve of each mixed-sign type
        for (int s : {-1, 1}) {
            const BranchSpec spec{-s, s, 0};
            const double a = kSqrt2 * branch_f(spec, 0.0, 0.0, 1.0) / d;
            push_entry(entries, prob, spec, a, 0, class_label(0, s), false);
        }
        for (int k = 1; k <= k_max; ++k) {
            for (int s : {-1, 1}) {
                const BranchSpec spec{-s, s, static_cast<unsigned>(k)};
                const double a = kSqrt2 * branch_f(spec, 0.0, 0.0, 1.0) / d;
                push_entry(entries, prob, spec, a, k, class_label(k, s), false);
            }
            for (int s : {-1, 1}) {
                const BranchSpec spec{s, s, static_cast<unsigned>(k)};
                const double a = kSqrt2 * branch_f(spec, 0.0, 0.0, 1.0) / d;
                push_entry(entries, prob, spec, a, k, class_label(k, 0), false);
            }
        }
    } else {
        for (int k = 0; k <= k_max; ++k) {
            const double kC = k * C;
            const double two_kC = 2.0 * kC;
            const double tol_b = 1e-10 * std::max(1.0, two_kC);
            const std::string label = class_label(k, sgn);

            // type (-sgn, sgn, k): concave level form, thresholds 2kC and M_k
            {
                const BranchSpec spec{-sgn, sgn, static_cast<unsigned>(k)};
                const auto mk = ell::m_k(static_cast<unsigned>(k));
                const double tol_m = 1e-10 * std::max(1.0, mk.M);
                auto rhs = [kC](double z) { return rhs_concave(z, kC); };
                if (std::fabs(level - mk.M) <= tol_m) {
                    push_entry(entries, prob, spec, abs_k / (kSqrt2 * mk.z_star), k, label, false);
                } else if (level < mk.M) {
                    const double z1 = bisect_level(rhs, level, 0.0, mk.z_star, true);
                    push_entry(entries, prob, spec, abs_k / (kSqrt2 * z1), k, label, false);
                    if (level > two_kC + tol_b) {
                        const double z2 = bisect_level(rhs, level, mk.z_star, 1.0, false);
                        push_entry(entries, prob, spec, abs_k / (kSqrt2 * z2), k, label, false);
                    }
                }
            }
            if (k == 0) continue;

            // type (sgn, -sgn, k-1): increasing level form on [0,1)
            if (level < two_kC - tol_b) {
                const BranchSpec spec{sgn, -sgn, static_cast<unsigned>(k - 1)};
                auto rhs = [kC](double z) { return rhs_increasing(z, kC); };
                const double z = bisect_level(rhs, level, 0.0, 1.0, true);
                push_entry(entries, prob, spec, abs_k / (kSqrt2 * z), k, label, false);
            }

            // equal-sign types at a = sqrt2 kC / d; (sgn,sgn,k) admits the
            // corner z = 1, (-sgn,-sgn,k) does not
            const double a_eq = kSqrt2 * kC / d;
            const bool at_corner = std::fabs(level - two_kC) <= tol_b;
            if (level < two_kC - tol_b || at_corner) {
                const BranchSpec spec{sgn, sgn, static_cast<unsigned>(k)};
                push_entry(entries, prob, spec, a_eq, k, class_label(k, 0), at_corner);
            }
            if (level < two_kC - tol_b) {
                const BranchSpec spec{-sgn, -sgn, static_cast<unsigned>(k)};
                push_entry(entries, prob, spec, a_eq, k, class_label(k, 0), false);
            }
        }
    }

    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& x, const CatalogEntry& y) {
        const auto key = [](const CatalogEntry& e) {
            const auto& b = *e.sol.branch;
            return std::tuple<int, int, int, double>(e.k, b.sigma1, b.sigma2, e.sol.params.a);
        };
        return key(x) < key(y);
    });

    std::vector<Solution> out;
    if (kappa == 0.0) out.push_back(straight_line_solution(A, B));
    for (auto& e : entries) out.push_back(std::move(e.sol));
    return out;
}

Solution minimizer(Vec2 A, Vec2 B, double kappa) {
    const Problem prob{A, B, kappa, kappa};
    const double d = chord_length(prob);
    if (kappa == 0.0) return straight_line_solution(A, B);

    const double C = ell::constants().C;
    const double level = std::fabs(kappa) * d;
    const double abs_k = std::fabs(kappa);
    const int sgn = detail::sign_of(kappa);

    int k = 0;
    while (level > 2.0 * (k + 1) * C) ++k; // now 2kC < level <= 2(k+1)C
    const auto mk = ell::m_k(static_cast<unsigned>(k));

    std::optional<Solution> sol;
    if (level <= mk.M) {
        // larger-z root of the concave form, type (-sgn, sgn, k)
        const double kC = k * C;
        auto rhs = [kC](double z) { return rhs_concave(z, kC); };
        const double tol_m = 1e-10 * std::max(1.0, mk.M);
        const double z = (std::fabs(level - mk.M) <= tol_m)
                             ? mk.z_star
                             : bisect_level(rhs, level, mk.z_star, 1.0, false);
        sol = build_solution(prob, {-sgn, sgn, static_cast<unsigned>(k)}, abs_k / (kSqrt2 * z));
        if (sol) sol->class_label = class_label(k, sgn);
    } else {
        const double kC1 = (k + 1) * C;
        const double tol_eq = 1e-10 * std::max(1.0, 2.0 * kC1);
        if (level >= 2.0 * kC1 - tol_eq) {
            // right endpoint of the regime: the limit curve sits on the corner
            // z = 1 and carries the equal-sign type of the next class
            sol = build_solution(prob, {sgn, sgn, static_cast<unsigned>(k + 1)},
                                 kSqrt2 * kC1 / d);
            if (sol) sol->class_label = class_label(k + 1, 0);
        } else {
            // unique type (sgn, -sgn, k), class k+1
            auto rhs = [kC1](double z) { return rhs_increasing(z, kC1); };
            const double z = bisect_level(rhs, level, 0.0, 1.0, true);
            sol = build_solution(prob, {sgn, -sgn, static_cast<unsigned>(k)}, abs_k / (kSqrt2 * z));
            if (sol) sol->class_label = class_label(k + 1, sgn);
        }
    }
    if (!sol) throw std::runtime_error("minimizer: expected solution did not materialize");
    return *sol;
}

unsigned j0_star(const Problem& problem, int sigma1, int sigma2) {
    if (problem.kappa1 == problem.kappa2)
        throw std::domain_error("j0_star: symmetric data, use the catalog");
    const double C = ell::constants().C;
    const double d2 = (problem.B - problem.A).dot(problem.B - problem.A);
    const double k2 = std::max(problem.kappa1 * problem.kappa1, problem.kappa2 * problem.kappa2);
    const double k4 = k2 * k2;
    const double dk = problem.kappa2 - problem.kappa1;
    const double c = (sigma1 == sigma2) ? 0.5 : 1.0;
    auto satisfied = [&](unsigned j) {
        const double t = static_cast<double>(j) - c;
        return 4.0 * C * C * t * t / k2 + 4.0 * dk * dk / k4 >= d2;
    };
    unsigned j = 1;
    while (!satisfied(j)) {
        ++j;
        if (j > 100000000u) throw std::runtime_error("j0_star: bound did not close");
    }
    return j;
}

std::vector<Solution> solve_increasing(const Problem& problem, int sigma1, int sigma2,
                                       unsigned j_max) {
    if (problem.kappa1 == problem.kappa2)
        throw std::domain_error("solve_increasing: symmetric data, use the catalog");
    std::vector<Solution> out;
    double last_a = -1.0;
    for (unsigned j = 0; j <= j_max; ++j) {
        auto sols = solve_branch(problem, {sigma1, sigma2, j});
        if (sols.empty()) continue;
        Solution& sol = sols.front(); // minimal generating scale for this j
        if (!out.empty() && !(sol.params.a > last_a))
            throw std::logic_error("solve_increasing: generating scales failed to increase");
        last_a = sol.params.a;
        out.push_back(std::move(sol));
    }
    return out;
}

} // namespace willmore::navier
