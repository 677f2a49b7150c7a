/* willmore.h - C interface to the planar Willmore curve solver.
 *
 * All solver entry points return a status code and hand results back
 * through an opaque solution set. Pointers returned by the library are
 * owned by the library and released with wlm_solution_set_free.
 */

#ifndef WILLMORE_H
#define WILLMORE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wlm_status {
    WLM_OK = 0,
    WLM_ERR_INVALID_ARGUMENT = 1, /* bad value, A == B, |theta2-theta1| > pi */
    WLM_ERR_DOMAIN = 2,           /* argument outside a mathematical domain */
    WLM_ERR_INDEX = 3,            /* index out of range */
    WLM_ERR_INTERNAL = 4
} wlm_status;

/* Static description of a status code. */
const char* wlm_status_str(wlm_status status);

/* Message of the most recent error on this thread (empty string if none). */
const char* wlm_last_error(void);

/* ---- constants -------------------------------------------------------- */

/* Period T of cn and the integral constant C. */
wlm_status wlm_constants(double* period, double* block);

/* M_k = max_z 2z(kC + 2G(z)) and its argmax. */
wlm_status wlm_threshold(unsigned k, double* m_value, double* z_star);

/* ---- solutions -------------------------------------------------------- */

typedef enum wlm_symmetry {
    WLM_SYM_AXIAL = 0,
    WLM_SYM_POINT = 1,
    WLM_SYM_NONE = 2
} wlm_symmetry;

typedef struct wlm_residuals {
    double endpoint;   /* worst |gamma(L) - B| over both verification routes */
    double r1, r2;     /* curvature (Navier) or angle (Dirichlet) defects */
    int angles;        /* nonzero when r1/r2 are angles */
    double ode_defect; /* sup |kappa'' + kappa^3/2| / a^3 */
    int pass;
} wlm_residuals;

typedef struct wlm_solution {
    double a;            /* curvature scale; 0 encodes the straight line */
    double b;            /* cn phase in [-T/2, T/2) */
    double length;       /* arc length L */
    double rotation[4];  /* frame rotation Q, row-major */
    double start[2];     /* start point A */
    int has_branch;      /* 0 for the straight line */
    int sigma1, sigma2;
    unsigned j;
    double energy;
    wlm_symmetry symmetry;
    char class_label[8]; /* "F2+", "F1", ...; empty outside symmetric catalogs */
    int boundary_case;   /* existence exactly on a class threshold */
    wlm_residuals residuals;
} wlm_solution;

typedef struct wlm_solution_set wlm_solution_set;

size_t wlm_solution_count(const wlm_solution_set* set);
wlm_status wlm_solution_at(const wlm_solution_set* set, size_t index, wlm_solution* out);
void wlm_solution_set_free(wlm_solution_set* set);

/* ---- Navier problem (endpoints + endpoint curvatures) ----------------- */

/* All (sigma1, sigma2, j)-type solutions. */
wlm_status wlm_navier_branch(double ax, double ay, double bx, double by, double kappa1,
                             double kappa2, int sigma1, int sigma2, unsigned j,
                             wlm_solution_set** out);

/* One solution per branch index from the first nonempty one; kappa1 != kappa2. */
wlm_status wlm_navier_increasing(double ax, double ay, double bx, double by, double kappa1,
                                 double kappa2, int sigma1, int sigma2, unsigned j_max,
                                 wlm_solution_set** out);

/* Smallest j* >= 1 guaranteeing a (sigma1, sigma2, j)-type solution for all
 * j >= j*; kappa1 != kappa2. */
wlm_status wlm_navier_j0_star(double ax, double ay, double bx, double by, double kappa1,
                              double kappa2, int sigma1, int sigma2, unsigned* out);

/* Complete catalog of the symmetric problem, classes F_0..F_k_max
 * (k_max < 0 selects an automatic cap covering all non-generic classes). */
wlm_status wlm_navier_symmetric_catalog(double ax, double ay, double bx, double by, double kappa,
                                        int k_max, wlm_solution_set** out);

/* Minimal-energy solution of the symmetric problem. */
wlm_status wlm_navier_minimizer(double ax, double ay, double bx, double by, double kappa,
                                wlm_solution_set** out);

/* Independent root recount for one branch (oracle). */
wlm_status wlm_navier_sweep_count(double ax, double ay, double bx, double by, double kappa1,
                                  double kappa2, int sigma1, int sigma2, unsigned j,
                                  size_t samples, size_t* out);

/* ---- Dirichlet problem (endpoints + tangent angles, radians) ---------- */

wlm_status wlm_dirichlet_branch(double ax, double ay, double bx, double by, double theta1,
                                double theta2, int sigma1, int sigma2, unsigned j, int eta,
                                wlm_solution_set** out);

wlm_status wlm_dirichlet_enumerate(double ax, double ay, double bx, double by, double theta1,
                                   double theta2, unsigned j_max, wlm_solution_set** out);

/* ---- per-solution utilities ------------------------------------------- */

/* n >= 2 equally spaced arc-length samples; out holds 4n doubles laid out
 * as (s, x, y, kappa) per sample. */
wlm_status wlm_sample(const wlm_solution* solution, size_t n, double* out);

/* Re-verify a solution against Navier data. Negative tolerances select the
 * defaults (1e-8 endpoint/curvature/angle, 1e-5 ODE defect). */
wlm_status wlm_verify_navier(double ax, double ay, double bx, double by, double kappa1,
                             double kappa2, const wlm_solution* solution, double tol,
                             wlm_residuals* out);

wlm_status wlm_verify_dirichlet(double ax, double ay, double bx, double by, double theta1,
                                double theta2, const wlm_solution* solution, double tol,
                                wlm_residuals* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WILLMORE_H */
