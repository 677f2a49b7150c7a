#include "willmore.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "willmore/dirichlet.hpp"
#include "willmore/elliptic.hpp"
#include "willmore/navier.hpp"
#include "willmore/oracle.hpp"

using willmore::BranchSpec;
using willmore::CurveParams;
using willmore::Rot2;
using willmore::Solution;
using willmore::SymmetryClass;
using willmore::Vec2;

extern "C" struct wlm_solution_set {
    std::vector<Solution> items;
};

namespace {

thread_local std::string t_last_error;

wlm_status fail(wlm_status code, const char* what) {
    t_last_error = what;
    return code;
}

template <typename Fn>
wlm_status guarded(Fn&& fn) {
    try {
        fn();
        t_last_error.clear();
        return WLM_OK;
    } catch (const std::invalid_argument& e) {
        return fail(WLM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error& e) {
        return fail(WLM_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc& e) {
        return fail(WLM_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(WLM_ERR_INTERNAL, e.what());
    }
}

wlm_solution to_c(const Solution& s) {
    wlm_solution out{};
    out.a = s.params.a;
    out.b = s.params.b;
    out.length = s.params.L;
    s.params.Q.to_matrix(out.rotation);
    out.start[0] = s.params.A.x;
    out.start[1] = s.params.A.y;
    out.has_branch = s.branch.has_value() ? 1 : 0;
    out.sigma1 = s.branch ? s.branch->sigma1 : 0;
    out.sigma2 = s.branch ? s.branch->sigma2 : 0;
    out.j = s.branch ? s.branch->j : 0;
    out.energy = s.energy;
    switch (s.symmetry) {
    case SymmetryClass::AxiallySymmetric: out.symmetry = WLM_SYM_AXIAL; break;
    case SymmetryClass::PointwiseSymmetric: out.symmetry = WLM_SYM_POINT; break;
    case SymmetryClass::Asymmetric: out.symmetry = WLM_SYM_NONE; break;
    }
    std::snprintf(out.class_label, sizeof(out.class_label), "%s", s.class_label.c_str());
    out.boundary_case = s.boundary_case ? 1 : 0;
    out.residuals.endpoint = s.residuals.endpoint;
    out.residuals.r1 = s.residuals.r1;
    out.residuals.r2 = s.residuals.r2;
    out.residuals.angles = s.residuals.angles ? 1 : 0;
    out.residuals.ode_defect = s.residuals.ode_defect;
    out.residuals.pass = s.residuals.pass ? 1 : 0;
    return out;
}

Solution from_c(const wlm_solution& s) {
    Solution out;
    out.params.a = s.a;
    out.params.b = s.b;
    out.params.L = s.length;
    // rotation entries are (c,-s;s,c); rebuild from the first column
    out.params.Q = Rot2{s.rotation[0], s.rotation[2]};
    out.params.A = Vec2{s.start[0], s.start[1]};
    if (s.has_branch) out.branch = BranchSpec{s.sigma1, s.sigma2, s.j};
    out.energy = s.energy;
    out.length = s.length;
    return out;
}

void hand_out(wlm_solution_set** out, std::vector<Solution>&& items) {
    if (out == nullptr) throw std::invalid_argument("null output pointer");
    *out = new wlm_solution_set{std::move(items)};
}

willmore::oracle::Tolerances tolerances_from(double tol) {
    willmore::oracle::Tolerances t;
    if (tol > 0.0) {
        t.endpoint_rel = tol;
        t.curvature = tol;
        t.angle = tol;
    }
    return t;
}

} // namespace

const char* wlm_status_str(wlm_status status) {
    switch (status) {
    case WLM_OK: return "ok";
    case WLM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WLM_ERR_DOMAIN: return "domain error";
    case WLM_ERR_INDEX: return "index out of range";
    case WLM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* wlm_last_error(void) { return t_last_error.c_str(); }

wlm_status wlm_constants(double* period, double* block) {
    return guarded([&] {
        const auto& k = willmore::ell::constants();
        if (period) *period = k.T;
        if (block) *block = k.C;
    });
}

wlm_status wlm_threshold(unsigned k, double* m_value, double* z_star) {
    return guarded([&] {
        const auto t = willmore::ell::m_k(k);
        if (m_value) *m_value = t.M;
        if (z_star) *z_star = t.z_star;
    });
}

size_t wlm_solution_count(const wlm_solution_set* set) {
    return set == nullptr ? 0 : set->items.size();
}

wlm_status wlm_solution_at(const wlm_solution_set* set, size_t index, wlm_solution* out) {
    if (set == nullptr || out == nullptr)
        return fail(WLM_ERR_INVALID_ARGUMENT, "null pointer");
    if (index >= set->items.size()) return fail(WLM_ERR_INDEX, "solution index out of range");
    *out = to_c(set->items[index]);
    return WLM_OK;
}

void wlm_solution_set_free(wlm_solution_set* set) { delete set; }

wlm_status wlm_navier_branch(double ax, double ay, double bx, double by, double kappa1,
                             double kappa2, int sigma1, int sigma2, unsigned j,
                             wlm_solution_set** out) {
    return guarded([&] {
        willmore::navier::Problem prob{{ax, ay}, {bx, by}, kappa1, kappa2};
        auto sols = willmore::navier::solve_branch(prob, BranchSpec{sigma1, sigma2, j});
        hand_out(out, std::move(sols));
    });
}

wlm_status wlm_navier_increasing(double ax, double ay, double bx, double by, double kappa1,
                                 double kappa2, int sigma1, int sigma2, unsigned j_max,
                                 wlm_solution_set** out) {
    return guarded([&] {
        willmore::navier::Problem prob{{ax, ay}, {bx, by}, kappa1, kappa2};
        auto sols = willmore::navier::solve_increasing(prob, sigma1, sigma2, j_max);
        hand_out(out, std::move(sols));
    });
}

wlm_status wlm_navier_j0_star(double ax, double ay, double bx, double by, double kappa1,
                              double kappa2, int sigma1, int sigma2, unsigned* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output pointer");
        willmore::navier::Problem prob{{ax, ay}, {bx, by}, kappa1, kappa2};
        *out = willmore::navier::j0_star(prob, sigma1, sigma2);
    });
}

wlm_status wlm_navier_symmetric_catalog(double ax, double ay, double bx, double by, double kappa,
                                        int k_max, wlm_solution_set** out) {
    return guarded([&] {
        auto sols = willmore::navier::solve_symmetric_catalog({ax, ay}, {bx, by}, kappa, k_max);
        hand_out(out, std::move(sols));
    });
}

wlm_status wlm_navier_minimizer(double ax, double ay, double bx, double by, double kappa,
                                wlm_solution_set** out) {
    return guarded([&] {
        std::vector<Solution> sols;
        sols.push_back(willmore::navier::minimizer({ax, ay}, {bx, by}, kappa));
        hand_out(out, std::move(sols));
    });
}

wlm_status wlm_navier_sweep_count(double ax, double ay, double bx, double by, double kappa1,
                                  double kappa2, int sigma1, int sigma2, unsigned j,
                                  size_t samples, size_t* out) {
    return guarded([&] {
        if (out == nullptr) throw std::invalid_argument("null output pointer");
        willmore::navier::Problem prob{{ax, ay}, {bx, by}, kappa1, kappa2};
        *out = willmore::oracle::sweep_count(prob, BranchSpec{sigma1, sigma2, j}, samples);
    });
}

wlm_status wlm_dirichlet_branch(double ax, double ay, double bx, double by, double theta1,
                                double theta2, int sigma1, int sigma2, unsigned j, int eta,
                                wlm_solution_set** out) {
    return guarded([&] {
        willmore::dirichlet::Problem prob{{ax, ay}, {bx, by}, theta1, theta2};
        auto sols =
            willmore::dirichlet::solve_branch(prob, willmore::dirichlet::Branch{sigma1, sigma2, j, eta});
        hand_out(out, std::move(sols));
    });
}

wlm_status wlm_dirichlet_enumerate(double ax, double ay, double bx, double by, double theta1,
                                   double theta2, unsigned j_max, wlm_solution_set** out) {
    return guarded([&] {
        willmore::dirichlet::Problem prob{{ax, ay}, {bx, by}, theta1, theta2};
        auto sols = willmore::dirichlet::enumerate(prob, j_max);
        hand_out(out, std::move(sols));
    });
}

wlm_status wlm_sample(const wlm_solution* solution, size_t n, double* out) {
    return guarded([&] {
        if (solution == nullptr || out == nullptr)
            throw std::invalid_argument("null pointer");
        const Solution s = from_c(*solution);
        auto pts = willmore::curve::sample(s.params, n);
        for (size_t i = 0; i < pts.size(); ++i) {
            out[4 * i + 0] = pts[i].s;
            out[4 * i + 1] = pts[i].pos.x;
            out[4 * i + 2] = pts[i].pos.y;
            out[4 * i + 3] = pts[i].kappa;
        }
    });
}

wlm_status wlm_verify_navier(double ax, double ay, double bx, double by, double kappa1,
                             double kappa2, const wlm_solution* solution, double tol,
                             wlm_residuals* out) {
    return guarded([&] {
        if (solution == nullptr || out == nullptr)
            throw std::invalid_argument("null pointer");
        willmore::navier::Problem prob{{ax, ay}, {bx, by}, kappa1, kappa2};
        const Solution s = from_c(*solution);
        const auto rep = willmore::oracle::verify_navier(prob, s, tolerances_from(tol));
        out->endpoint = rep.endpoint;
        out->r1 = rep.r1;
        out->r2 = rep.r2;
        out->angles = rep.angles ? 1 : 0;
        out->ode_defect = rep.ode_defect;
        out->pass = rep.pass ? 1 : 0;
    });
}

wlm_status wlm_verify_dirichlet(double ax, double ay, double bx, double by, double theta1,
                                double theta2, const wlm_solution* solution, double tol,
                                wlm_residuals* out) {
    return guarded([&] {
        if (solution == nullptr || out == nullptr)
            throw std::invalid_argument("null pointer");
        willmore::dirichlet::Problem prob{{ax, ay}, {bx, by}, theta1, theta2};
        const Solution s = from_c(*solution);
        const auto rep = willmore::oracle::verify_dirichlet(prob, s, tolerances_from(tol));
        out->endpoint = rep.endpoint;
        out->r1 = rep.r1;
        out->r2 = rep.r2;
        out->angles = rep.angles ? 1 : 0;
        out->ode_defect = rep.ode_defect;
        out->pass = rep.pass ? 1 : 0;
    });
}
