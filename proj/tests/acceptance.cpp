// Acceptance suite: one check per shipped guarantee, one line of output
// each. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "willmore/curve.hpp"
#include "willmore/dirichlet.hpp"
#include "willmore/elliptic.hpp"
#include "willmore/navier.hpp"
#include "willmore/oracle.hpp"

using namespace willmore;

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

struct Tracked {
    navier::Problem prob;
    Solution sol;
};

std::vector<Tracked> g_solutions; // accumulated by criteria 2-5 for criterion 7

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int class_of(const Solution& s, double kappa) {
    if (!s.branch) return 0;
    const auto& b = *s.branch;
    if (kappa == 0.0) return static_cast<int>(b.j);
    const int sgn = kappa > 0.0 ? 1 : -1;
    return static_cast<int>(b.j) + ((b.sigma1 == sgn && b.sigma2 == -sgn) ? 1 : 0);
}

std::map<int, int> class_counts(const std::vector<Solution>& sols, double kappa) {
    std::map<int, int> counts;
    for (const auto& s : sols) ++counts[class_of(s, kappa)];
    return counts;
}

std::size_t sweep_class(const navier::Problem& prob, double kappa, int k) {
    const int sgn = kappa >= 0.0 ? 1 : -1;
    if (kappa == 0.0) {
        if (k == 0)
            return oracle::sweep_count(prob, {-1, 1, 0}) + oracle::sweep_count(prob, {1, -1, 0}) +
                   1; // straight line
        return oracle::sweep_count(prob, {-1, 1, static_cast<unsigned>(k)}) +
               oracle::sweep_count(prob, {1, -1, static_cast<unsigned>(k)}) +
               oracle::sweep_count(prob, {1, 1, static_cast<unsigned>(k)}) +
               oracle::sweep_count(prob, {-1, -1, static_cast<unsigned>(k)});
    }
    if (k == 0) return oracle::sweep_count(prob, {-sgn, sgn, 0});
    return oracle::sweep_count(prob, {sgn, -sgn, static_cast<unsigned>(k - 1)}) +
           oracle::sweep_count(prob, {-sgn, sgn, static_cast<unsigned>(k)}) +
           oracle::sweep_count(prob, {sgn, sgn, static_cast<unsigned>(k)}) +
           oracle::sweep_count(prob, {-sgn, -sgn, static_cast<unsigned>(k)});
}

// expected |F_k| for chord-scaled curvature level ell = |kappa| d
int expected_count(int k, double ell, double M_k, double C) {
    const double tol = 1e-9 * std::max(1.0, M_k);
    if (k == 0) {
        if (ell == 0.0) return 3;
        if (std::fabs(ell - M_k) <= tol) return 1;
        return ell < M_k ? 2 : 0;
    }
    const double two_kC = 2.0 * k * C;
    if (std::fabs(ell - M_k) <= tol) return 1;
    if (ell > M_k) return 0;
    if (ell < two_kC - tol) return 4;
    return 2; // 2kC <= ell < M_k
}

// ---- criteria ----------------------------------------------------------

bool criterion1(std::string& detail) {
    const double t0 = now_seconds();
    const auto& k = ell::constants();
    const auto m0 = ell::m_k(0);
    const double elapsed = now_seconds() - t0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "T=%.6f M0=%.6f 2C=%.6f in %.3fs", k.T, m0.M, 2.0 * k.C,
                  elapsed);
    detail = buf;
    return std::fabs(k.T - 7.41630) < 1e-4 && std::fabs(m0.M - 1.34380) < 1e-4 &&
           std::fabs(2.0 * k.C - 4.79256) < 1e-3 && elapsed < 1.0;
}

bool criterion2(std::string& detail) {
    const double t0 = now_seconds();
    const navier::Problem prob{{0, 0}, {1, 0}, 9.885, 9.885};
    const auto b2 = navier::solve_branch(prob, {-1, 1, 2});
    const auto b3 = navier::solve_branch(prob, {-1, 1, 3});
    const double elapsed = now_seconds() - t0;

    const auto hit2 = std::find_if(b2.begin(), b2.end(), [](const Solution& s) {
        return std::fabs(s.params.a - 7.48526) <= 1e-4;
    });
    const auto hit3 = std::find_if(b3.begin(), b3.end(), [](const Solution& s) {
        return std::fabs(s.params.a - 11.65140) <= 1e-4;
    });
    if (hit2 == b2.end() || hit3 == b3.end()) {
        detail = "published generating scales not found";
        return false;
    }
    for (const auto& s : b2) g_solutions.push_back({prob, s});
    for (const auto& s : b3) g_solutions.push_back({prob, s});
    char buf[200];
    std::snprintf(buf, sizeof(buf), "a=%.5f L1=%.5f; a=%.5f L2=%.5f in %.3fs", hit2->params.a,
                  hit2->length, hit3->params.a, hit3->length, elapsed);
    detail = buf;
    return std::fabs(hit2->length - 2.08043) <= 1e-4 && std::fabs(hit3->length - 2.08018) <= 1e-4 &&
           hit3->length < hit2->length && elapsed < 1.0;
}

bool criterion3(std::string& detail) {
    const auto& k = ell::constants();
    int checked = 0;
    bool ok = true;
    for (double d : {1.0, 2.6}) {
        const double lstar = k.T * d / (kSqrt2 * k.C);
        for (double kappa : {0.7, -1.8, 3.1, 6.0}) {
            const auto cat = navier::solve_symmetric_catalog({0, 0}, {d, 0}, kappa);
            for (const auto& s : cat) {
                if (!s.branch || s.branch->sigma1 != s.branch->sigma2) continue;
                ++checked;
                ok = ok && std::fabs(s.length - lstar) <= 1e-9 * lstar;
                if (d == 1.0) ok = ok && std::fabs(s.length - 2.18844) <= 1e-4;
                g_solutions.push_back({navier::Problem{{0, 0}, {d, 0}, kappa, kappa}, s});
            }
        }
    }
    detail = "checked " + std::to_string(checked) + " equal-sign solutions";
    return ok && checked >= 8;
}

bool criterion4(std::string& detail) {
    const double t0 = now_seconds();
    const auto& kc = ell::constants();
    const double C = kc.C;
    const double M0 = ell::m_k(0).M;
    const double M1 = ell::m_k(1).M;
    const double M2 = ell::m_k(2).M;

    std::vector<double> kappas{0.0, M0, -M0, M1, -M1, M2, -M2, 2.0 * C, -2.0 * C, 4.0 * C,
                               -4.0 * C};
    for (double m : {0.25 * M0, 0.5 * M0, 0.9 * M0, 1.2 * M0, 0.5 * (M0 + 2.0 * C),
                     0.95 * 2.0 * C, 0.5 * (2.0 * C + M1), 0.97 * M1, 1.02 * M1,
                     0.5 * (M1 + 4.0 * C), 0.99 * 4.0 * C, 0.5 * (4.0 * C + M2), 0.99 * M2,
                     1.02 * M2, 1.15 * M2}) {
        kappas.push_back(m);
        kappas.push_back(-m);
    }

    const double Ms[3] = {M0, M1, M2};
    bool ok = true;
    int checks = 0;
    for (double kappa : kappas) {
        const double ell_level = std::fabs(kappa); // d = 1
        const auto cat = navier::solve_symmetric_catalog({0, 0}, {1, 0}, kappa, 3);
        const auto counts = class_counts(cat, kappa);
        const navier::Problem prob{{0, 0}, {1, 0}, kappa, kappa};
        for (int k = 0; k <= 2; ++k) {
            const int want = expected_count(k, ell_level, Ms[k], C);
            const int have = counts.count(k) ? counts.at(k) : 0;
            const std::size_t swept = sweep_class(prob, kappa, k);
            ++checks;
            if (have != want || swept != static_cast<std::size_t>(want)) {
                char buf[200];
                std::snprintf(buf, sizeof(buf),
                              "kappa=%.6f class %d: catalog %d, sweep %zu, expected %d", kappa, k,
                              have, swept, want);
                detail = buf;
                ok = false;
            }
        }
        for (const auto& s : cat) g_solutions.push_back({prob, s});
    }
    const double elapsed = now_seconds() - t0;
    if (ok) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%d (kappa, class) cells agree with the recount in %.1fs",
                      checks, elapsed);
        detail = buf;
    }
    return ok && elapsed < 30.0;
}

bool criterion5(std::string& detail) {
    std::mt19937_64 gen{471100};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    bool ok = true;
    int produced = 0;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        const double k1 = -5.0 + 10.0 * u01(gen);
        const double k2 = -5.0 + 10.0 * u01(gen);
        const double d = 0.1 + 9.9 * u01(gen);
        const double ang = 6.283185307179586 * u01(gen);
        const Vec2 A{-5.0 + 10.0 * u01(gen), -5.0 + 10.0 * u01(gen)};
        const Vec2 B = A + d * Vec2{std::cos(ang), std::sin(ang)};
        const navier::Problem prob{A, B, k1, k2};
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1})
                for (unsigned j = 0; j <= 5; ++j)
                    for (const auto& s : navier::solve_branch(prob, {s1, s2, j})) {
                        ++produced;
                        const double kscale = std::max(1.0, s.params.a * s.params.a);
                        if (!(s.residuals.endpoint <= 1e-8 * d &&
                              s.residuals.r1 <= 1e-8 * kscale &&
                              s.residuals.r2 <= 1e-8 * kscale)) {
                            char buf[200];
                            std::snprintf(buf, sizeof(buf),
                                          "trial %d branch (%d,%d,%u): endpoint %.3g r %.3g/%.3g",
                                          trial, s1, s2, j, s.residuals.endpoint, s.residuals.r1,
                                          s.residuals.r2);
                            detail = buf;
                            ok = false;
                        }
                        g_solutions.push_back({prob, s});
                    }
    }
    if (ok) detail = std::to_string(produced) + " solutions within 1e-8 boundary residuals";
    return ok && produced > 1000;
}

bool criterion6(std::string& detail) {
    const auto& kc = ell::constants();
    std::mt19937_64 gen{654321};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        const double a = 0.3 + 2.2 * u01(gen);
        const double b = -0.5 * kc.T + kc.T * u01(gen);
        const double L = 2.0 * kc.T / a;
        const auto jb = ell::jacobi(b);
        const double kappa0 = kSqrt2 * a * jb.cn;
        const double kappa0p = -kSqrt2 * a * a * jb.sn * jb.dn;

        const std::size_t n = 100000;
        const auto path = oracle::integrate_curvature_ode(kappa0, kappa0p, L, n);
        double sup = 0.0;
        for (std::size_t i = 0; i <= n; i += 23) {
            const double s = L * (static_cast<double>(i) / n);
            sup = std::max(sup, std::fabs(path[i] - kSqrt2 * a * ell::jacobi(a * s + b).cn));
        }
        if (sup > 1e-6 * kSqrt2 * a) {
            detail = "ODE/closed-form sup-norm " + std::to_string(sup);
            ok = false;
        }

        if (!(kappa0 == 0.0 && kappa0p == 0.0)) {
            const auto ivp = curve::from_ivp(kappa0, kappa0p);
            CurveParams p;
            p.a = ivp.a;
            p.b = ivp.b;
            p.L = 1.0;
            if (std::fabs(curve::curvature(p, 0.0) - kappa0) > 1e-8 ||
                std::fabs(curve::curvature_derivative(p, 0.0) - kappa0p) > 1e-8) {
                detail = "IVP round-trip exceeded 1e-8";
                ok = false;
            }
        }
    }
    if (ok) detail = "100 random generating pairs";
    return ok;
}

bool criterion7(std::string& detail) {
    bool ok = true;
    int checked = 0;
    for (const auto& [prob, s] : g_solutions) {
        if (s.params.a == 0.0) continue;
        ++checked;
        const double d = (prob.B - prob.A).norm();
        const double dk = prob.kappa2 - prob.kappa1;
        const double closed =
            std::sqrt(std::max(std::pow(s.params.a, 4) * d * d - dk * dk, 0.0));
        if (std::fabs(s.energy - closed) > 1e-9 * std::max(1e-12, s.energy)) {
            detail = "closed energy formula mismatch";
            ok = false;
            break;
        }
        // independent route: simpson quadrature of kappa^2/2
        const double L = s.params.L;
        const int periods =
            std::max(1, static_cast<int>(std::ceil(s.params.a * L / ell::constants().T)));
        const int n = std::max(4096, 1024 * periods);
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double arc = L * (static_cast<double>(i) / n);
            const double kap = curve::curvature(s.params, arc);
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            acc += w * kap * kap;
        }
        acc *= 0.5 * (L / n) / 3.0;
        if (std::fabs(s.energy - acc) > 1e-8 * std::max(1e-12, s.energy)) {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "quadrature energy mismatch: %.12g vs %.12g", s.energy,
                          acc);
            detail = buf;
            ok = false;
            break;
        }
    }
    if (ok) detail = std::to_string(checked) + " solutions, both energy routes agree";
    return ok && checked > 1000;
}

bool criterion8(std::string& detail) {
    std::mt19937_64 gen{777000};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    bool ok = true;
    int axial = 0;
    int point = 0;
    int asym = 0;

    auto check_axial_polyline = [&](const Solution& s) {
        const auto pts = curve::sample(s.params, 101);
        const Vec2 a = pts.front().pos;
        const Vec2 b = pts.back().pos;
        const Vec2 mid = 0.5 * (a + b);
        const double cn = (b - a).norm();
        if (cn <= 0.0) return false;
        const Vec2 cu = (1.0 / cn) * (b - a);
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Vec2 q = pts[pts.size() - 1 - i].pos;
            const Vec2 rel = q - mid;
            const Vec2 mirrored = q - 2.0 * rel.dot(cu) * cu;
            worst = std::max(worst, (pts[i].pos - mirrored).norm());
        }
        return worst <= 1e-7 * s.params.L;
    };
    auto check_point_polyline = [&](const Solution& s) {
        const auto pts = curve::sample(s.params, 101);
        const Vec2 center = 0.5 * (pts.front().pos + pts.back().pos);
        double worst = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            worst = std::max(worst,
                             (pts[i].pos + pts[pts.size() - 1 - i].pos - 2.0 * center).norm());
        return worst <= 1e-7 * s.params.L;
    };

    for (int trial = 0; trial < 40 && ok; ++trial) {
        const double kappa = (trial < 6) ? 0.0 : -5.0 + 10.0 * u01(gen);
        const double d = 0.1 + 9.9 * u01(gen);
        const auto cat = navier::solve_symmetric_catalog({0, 0}, {d, 0}, kappa);
        for (const auto& s : cat) {
            if (!s.branch) continue;
            if (s.branch->sigma1 == -s.branch->sigma2) {
                ++axial;
                if (s.symmetry != SymmetryClass::AxiallySymmetric || !check_axial_polyline(s)) {
                    detail = "mixed-sign solution not axially symmetric";
                    ok = false;
                    break;
                }
            } else if (kappa != 0.0) {
                ++asym;
                if (s.symmetry != SymmetryClass::Asymmetric) {
                    detail = "equal-sign solution misclassified at nonzero curvature";
                    ok = false;
                    break;
                }
            } else {
                ++point;
                if (s.symmetry != SymmetryClass::PointwiseSymmetric || !check_point_polyline(s)) {
                    detail = "equal-sign solution at zero curvature not pointwise symmetric";
                    ok = false;
                    break;
                }
            }
        }
    }
    if (ok) {
        char buf[120];
        std::snprintf(buf, sizeof(buf), "axial %d / pointwise %d / asymmetric %d verified", axial,
                      point, asym);
        detail = buf;
    }
    return ok && axial > 20 && point > 4 && asym > 20;
}

bool criterion9(std::string& detail) {
    bool ok = true;
    for (double beta : {0.5, 1.0, 2.0}) {
        const double th = std::atan(beta);
        const dirichlet::Problem prob{{0, 0}, {1, 0}, th, -th};

        const auto graph = dirichlet::solve_branch(prob, {1, -1, 0, -1});
        if (graph.size() != 1) {
            detail = "graph branch multiplicity != 1 at beta " + std::to_string(beta);
            return false;
        }
        const double z = ell::jacobi(graph[0].params.b).cn;
        if (std::fabs(z + std::sqrt(std::cos(th))) > 1e-10) {
            detail = "graph root off by more than 1e-10";
            return false;
        }

        const auto all = dirichlet::enumerate(prob, 6);
        int axial = 0;
        int asym = 0;
        for (const auto& s : all) {
            if (s.symmetry == SymmetryClass::AxiallySymmetric) ++axial;
            if (s.symmetry == SymmetryClass::Asymmetric) ++asym;
        }
        if (axial < 7 || asym < 1) {
            detail = "family counts too small";
            return false;
        }

        // strictly growing energies along the axially symmetric family
        for (int eta : {-1, 1}) {
            double prev = -1.0;
            for (unsigned j = 0; j <= 6; ++j) {
                const auto sols = dirichlet::solve_branch(prob, {1, -1, j, eta});
                const double zs = eta * std::sqrt(std::cos(th));
                const auto hit = std::find_if(sols.begin(), sols.end(), [&](const Solution& s) {
                    return std::fabs(ell::jacobi(s.params.b).cn - zs) < 1e-8;
                });
                if (hit == sols.end()) {
                    detail = "axially symmetric family member missing";
                    return false;
                }
                if (!(hit->energy > prev)) {
                    detail = "family energies not strictly increasing";
                    return false;
                }
                prev = hit->energy;
            }
        }
    }
    if (ok) detail = "graph reproduction and both families at beta in {0.5, 1, 2}";
    return ok;
}

bool criterion10(std::string& detail) {
    std::mt19937_64 gen{10101};
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    bool ok = true;
    unsigned max_jstar = 0;
    for (int trial = 0; trial < 50 && ok; ++trial) {
        const double k1 = -5.0 + 10.0 * u01(gen);
        double k2 = -5.0 + 10.0 * u01(gen);
        if (k1 == k2) k2 += 0.25;
        const double d = 0.1 + 9.9 * u01(gen);
        const navier::Problem prob{{0, 0}, {d, 0}, k1, k2};
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1}) {
                const unsigned jstar = navier::j0_star(prob, s1, s2);
                max_jstar = std::max(max_jstar, jstar);
                const auto seq = navier::solve_increasing(prob, s1, s2, jstar);
                if (seq.empty()) {
                    char buf[160];
                    std::snprintf(buf, sizeof(buf),
                                  "no solution up to j0*=%u for pattern (%d,%d), trial %d", jstar,
                                  s1, s2, trial);
                    detail = buf;
                    ok = false;
                    break;
                }
                double prev = -1.0;
                for (const auto& s : seq) {
                    if (!(s.energy > prev)) {
                        detail = "energies not strictly increasing";
                        ok = false;
                        break;
                    }
                    prev = s.energy;
                }
            }
    }
    if (ok)
        detail = "50 problems x 4 sign patterns, worst j0* = " + std::to_string(max_jstar);
    return ok;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "constants T, M0, 2C", criterion1},
        {2, "published minimal-length nonuniqueness", criterion2},
        {3, "universal length of equal-sign solutions", criterion3},
        {4, "multiplicity table with independent recount", criterion4},
        {5, "boundary residuals on randomized problems", criterion5},
        {6, "ODE oracle equivalence and IVP round-trip", criterion6},
        {7, "energy identity along both routes", criterion7},
        {8, "symmetry classes of symmetric solutions", criterion8},
        {9, "clamped-angle reproduction and families", criterion9},
        {10, "guaranteed branch index bound", criterion10},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures > 0) std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
