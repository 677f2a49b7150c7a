#include "willmore/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "numeric_util.hpp"
#include "willmore/elliptic.hpp"
#include "willmore/navier.hpp"
#include "willmore/oracle.hpp"

namespace willmore::dirichlet {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kPi = 3.141592653589793;

double chord_length(const Problem& problem) {
    const double d = (problem.B - problem.A).norm();
    if (d == 0.0)
        throw std::invalid_argument("dirichlet: A = B admits no solution; "
                                    "there are no closed Willmore curves");
    if (std::fabs(problem.theta2 - problem.theta1) > kPi + 1e-12)
        throw std::invalid_argument("dirichlet: require |theta2 - theta1| <= pi");
    return d;
}

// turning angle reached at phase z
double psi_of(double z, int sigma1, double dth) {
    return dth + sigma1 * std::acos(std::clamp(z * z, 0.0, 1.0));
}

bool in_window(double z, const Branch& br, double dth, double slack = 0.0) {
    const double w = br.sigma2 * psi_of(z, br.sigma1, dth);
    return w >= -slack && w <= 0.5 * kPi + slack;
}

struct Pieces {
    std::vector<std::pair<double, double>> intervals;
};

// subdivide [-1,1] at the boundary phases of the feasibility window
Pieces window_pieces(const Branch& br, double dth) {
    std::vector<double> cuts{-1.0, 1.0};
    for (double target : {0.0, br.sigma2 * 0.5 * kPi}) {
        const double val = br.sigma1 * (target - dth); // required arccos(z^2)
        if (val >= 0.0 && val <= 0.5 * kPi) {
            const double zz = std::cos(val);
            if (zz >= 0.0 && zz <= 1.0) {
                const double zr = std::sqrt(zz);
                cuts.push_back(zr);
                cuts.push_back(-zr);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double x, double y) { return std::fabs(x - y) < 1e-14; }),
               cuts.end());
    Pieces out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        if (in_window(mid, br, dth, 1e-12)) out.intervals.push_back({cuts[i], cuts[i + 1]});
    }
    return out;
}

struct Eval {
    bool ok = false;
    double zbar = 0.0;
    double alpha_bar = 0.0;
    double beta_bar = 0.0;
    long ceil_term = 0;
    double lhs_minus_rhs = 0.0; // the root function D(z)
    double alpha_v = 0.0;
    double beta_v = 0.0;
};

Eval eval_at(double z, const Branch& br, double dth, Vec2 v) {
    Eval e;
    const double psi = psi_of(z, br.sigma1, dth);
    const double cw = std::cos(psi);
    if (cw < 0.0) return e;
    const auto& kc = ell::constants();
    e.zbar = br.eta * std::sqrt(cw);
    const double u1 = ell::inv_cn(std::clamp(z, -1.0, 1.0));
    const double u2 = ell::inv_cn(std::clamp(e.zbar, -1.0, 1.0));
    const double q = (br.sigma1 * u1 - br.sigma2 * u2) / kc.T;
    e.ceil_term = detail::ceil_snapped(q);
    e.alpha_bar = (static_cast<double>(br.j) + static_cast<double>(e.ceil_term)) * kc.C -
                  br.sigma1 * ell::seg_integral(std::clamp(z, -1.0, 1.0)) +
                  br.sigma2 * ell::seg_integral(std::clamp(e.zbar, -1.0, 1.0));
    e.beta_bar = z - e.zbar;
    const double root1mz4 = std::sqrt(std::max(1.0 - z * z * z * z, 0.0));
    e.alpha_v = z * z * v.x - br.sigma1 * root1mz4 * v.y;
    e.beta_v = br.sigma1 * root1mz4 * v.x + z * z * v.y;
    e.lhs_minus_rhs = e.beta_bar * e.alpha_v - e.alpha_bar * e.beta_v;
    e.ok = true;
    return e;
}

std::optional<Solution> build_solution(const Problem& problem, const Branch& br, double z) {
    const double d = (problem.B - problem.A).norm();
    const double dth = problem.theta2 - problem.theta1;
    const Vec2 v = chord_frame(problem);
    const Eval e = eval_at(z, br, dth, v);
    if (!e.ok) return std::nullopt;
    if (!in_window(z, br, dth, 1e-12)) return std::nullopt;

    // corner and degeneracy constraints
    constexpr double edge = 1.0 - 4e-13;
    if (z >= edge && br.sigma1 != 1) return std::nullopt;
    if (z <= -edge && br.sigma1 != -1) return std::nullopt;
    if (e.zbar >= edge && br.sigma2 != 1) return std::nullopt;
    if (e.zbar <= -edge && br.sigma2 != -1) return std::nullopt;
    if (br.sigma1 == br.sigma2 && br.j == 0 && std::fabs(z - e.zbar) <= 1e-10)
        return std::nullopt;

    // the chord equation only fixes proportionality; require the same
    // orientation so that a > 0
    if (e.alpha_bar * e.alpha_v + e.beta_bar * e.beta_v <= 0.0) return std::nullopt;
    if (!(e.alpha_bar > 0.0)) return std::nullopt;

    const double norm = std::hypot(e.alpha_bar, e.beta_bar);
    if (norm <= 1e-14) return std::nullopt;
    const double a = kSqrt2 * norm / d;

    const auto& kc = ell::constants();
    const double u1 = ell::inv_cn(std::clamp(z, -1.0, 1.0));
    const double u2 = ell::inv_cn(std::clamp(e.zbar, -1.0, 1.0));
    double b = br.sigma1 * u1;
    if (b >= 0.5 * kc.T) b -= kc.T;
    const double m = static_cast<double>(br.j) + static_cast<double>(e.ceil_term);
    const double aL = m * kc.T + br.sigma2 * u2 - br.sigma1 * u1;
    if (!(aL > 1e-9)) return std::nullopt;

    CurveParams params;
    params.a = a;
    params.b = b;
    params.L = aL / a;
    params.A = problem.A;
    params.Q = Rot2::from_angle(problem.theta1);

    const auto type = curve::classify_type(params);
    if (!type || !(*type == BranchSpec{br.sigma1, br.sigma2, br.j})) return std::nullopt;

    Solution sol;
    sol.params = params;
    sol.branch = BranchSpec{br.sigma1, br.sigma2, br.j};
    sol.length = params.L;
    sol.energy = kSqrt2 * a * e.alpha_bar; // a^2 * alpha
    sol.symmetry = curve::classify_symmetry(params);
    sol.residuals = oracle::verify_dirichlet(problem, sol);

    // spurious proportionality roots reverse the chord direction and miss
    // the boundary data decisively; a loose gate filters them
    if (sol.residuals.endpoint > 1e-6 * d || sol.residuals.r1 > 1e-6 ||
        sol.residuals.r2 > 1e-6)
        return std::nullopt;
    return sol;
}

} // namespace

Vec2 chord_frame(const Problem& problem) {
    return Rot2::from_angle(problem.theta1).apply_transposed(problem.B - problem.A);
}

std::optional<BranchEval> branch_functions(double z, const Branch& branch, double theta1,
                                           double theta2) {
    if (!(z >= -1.0 && z <= 1.0)) throw std::domain_error("branch_functions: z outside [-1,1]");
    const Eval e = eval_at(z, branch, theta2 - theta1, Vec2{0.0, 0.0});
    if (!e.ok) return std::nullopt;
    return BranchEval{e.zbar, e.alpha_bar, e.beta_bar};
}

std::vector<Solution> solve_branch(const Problem& problem, const Branch& branch) {
    chord_length(problem);
    const double dth = problem.theta2 - problem.theta1;
    const Vec2 v = chord_frame(problem);

    std::vector<double> roots;
    const Pieces pieces = window_pieces(branch, dth);
    for (auto [zl, zr] : pieces.intervals) {
        constexpr int N = 4096;
        std::vector<double> zs(N + 1);
        std::vector<Eval> es(N + 1);
        double dscale = 0.0;
        for (int i = 0; i <= N; ++i) {
            zs[i] = zl + (zr - zl) * (static_cast<double>(i) / N);
            es[i] = eval_at(zs[i], branch, dth, v);
            if (es[i].ok) dscale = std::max(dscale, std::fabs(es[i].lhs_minus_rhs));
        }
        const double tol_zero = 1e-12 * (1.0 + dscale);
        auto sign_code = [&](const Eval& e) {
            if (!e.ok) return 9;
            if (std::fabs(e.lhs_minus_rhs) <= tol_zero) return 0;
            return e.lhs_minus_rhs > 0.0 ? 1 : -1;
        };

        auto bisect_piece = [&](double lo, double hi, double dlo) {
            for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
                const double mid = 0.5 * (lo + hi);
                const Eval em = eval_at(mid, branch, dth, v);
                if (!em.ok) break;
                if ((em.lhs_minus_rhs > 0.0) == (dlo > 0.0))
                    lo = mid;
                else
                    hi = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        };

        // zero runs
        int i = 0;
        while (i <= N) {
            if (sign_code(es[i]) == 0) {
                int jend = i;
                double best = zs[i];
                double bestv = std::fabs(es[i].lhs_minus_rhs);
                while (jend + 1 <= N && sign_code(es[jend + 1]) == 0) {
                    ++jend;
                    if (std::fabs(es[jend].lhs_minus_rhs) < bestv) {
                        bestv = std::fabs(es[jend].lhs_minus_rhs);
                        best = zs[jend];
                    }
                }
                roots.push_back(best);
                i = jend + 1;
            } else {
                ++i;
            }
        }

        for (int k = 0; k < N; ++k) {
            const int s0 = sign_code(es[k]);
            const int s1 = sign_code(es[k + 1]);
            if (s0 == 9 || s1 == 9 || s0 == 0 || s1 == 0) continue;
            if (es[k].ceil_term != es[k + 1].ceil_term) {
                // split the cell at the ceiling jump of alpha_bar
                double lo = zs[k];
                double hi = zs[k + 1];
                for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const Eval em = eval_at(mid, branch, dth, v);
                    if (!em.ok) break;
                    if (em.ceil_term == es[k].ceil_term)
                        lo = mid;
                    else
                        hi = mid;
                }
                const Eval el = eval_at(lo, branch, dth, v);
                const Eval er = eval_at(hi, branch, dth, v);
                if (el.ok) {
                    if (std::fabs(el.lhs_minus_rhs) <= tol_zero)
                        roots.push_back(lo);
                    else if ((el.lhs_minus_rhs > 0.0) != (es[k].lhs_minus_rhs > 0.0))
                        bisect_piece(zs[k], lo, es[k].lhs_minus_rhs);
                }
                if (er.ok) {
                    if (std::fabs(er.lhs_minus_rhs) <= tol_zero)
                        roots.push_back(hi);
                    else if ((er.lhs_minus_rhs > 0.0) != (es[k + 1].lhs_minus_rhs > 0.0))
                        bisect_piece(hi, zs[k + 1], er.lhs_minus_rhs);
                }
                continue;
            }
            if (s0 != s1) bisect_piece(zs[k], zs[k + 1], es[k].lhs_minus_rhs);
        }
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) { return std::fabs(x - y) < 1e-11; }),
                roots.end());

    std::vector<Solution> out;
    for (double z : roots) {
        auto sol = build_solution(problem, branch, z);
        if (sol) out.push_back(std::move(*sol));
    }
    std::sort(out.begin(), out.end(),
              [](const Solution& x, const Solution& y) { return x.params.a < y.params.a; });
    return out;
}

std::vector<Solution> enumerate(const Problem& problem, unsigned j_max) {
    chord_length(problem);
    const double d = (problem.B - problem.A).norm();
    std::vector<Solution> all;
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
            for (int eta : {-1, 1})
                for (unsigned j = 0; j <= j_max; ++j) {
                    auto sols = solve_branch(problem, Branch{s1, s2, j, eta});
                    for (auto& s : sols) all.push_back(std::move(s));
                }

    // different (sigma, eta) labelings can reach the same curve on window
    // boundaries; deduplicate on the scale-free generating triple
    std::vector<Solution> out;
    auto key = [d](const Solution& s) {
        return std::tuple<double, double, double>(s.params.a * d, s.params.b,
                                                  s.params.a * s.params.L);
    };
    std::sort(all.begin(), all.end(), [&](const Solution& x, const Solution& y) {
        return key(x) < key(y);
    });
    for (auto& s : all) {
        bool dup = false;
        if (!out.empty()) {
            const auto [ka, kb, kl] = key(s);
            const auto [pa, pb, pl] = key(out.back());
            dup = std::fabs(ka - pa) <= 1e-9 && std::fabs(kb - pb) <= 1e-9 &&
                  std::fabs(kl - pl) <= 1e-9;
        }
        if (!dup) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Solution& x, const Solution& y) {
        const auto rank = [](const Solution& s) {
            const auto& b = *s.branch;
            return std::tuple<double, int, int, unsigned>(s.energy, b.sigma1, b.sigma2, b.j);
        };
        return rank(x) < rank(y);
    });
    return out;
}

} // namespace willmore::dirichlet
