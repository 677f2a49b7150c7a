#pragma once

namespace willmore::ell {

/// Constants of the modulus-1/sqrt(2) Jacobi functions used throughout:
/// T is the real period of cn, C the quarter-period block of the cn^2
/// integral, i.e. (1/sqrt2) * int_0^T cn^2 = C.
struct Constants {
    double T;
    double C;
};

/// Computed once from the defining integrals on first use; thread-safe.
const Constants& constants();

struct Jacobi {
    double sn;
    double cn;
    double dn;
};

/// sn, cn, dn at modulus 1/sqrt(2), evaluated by the descending
/// Landen/AGM scheme after reduction modulo the period.
/// Throws std::domain_error for non-finite input.
Jacobi jacobi(double u);

/// Convenience: cn component only.
double cn(double u);

/// Inverse of cn restricted to [0, T/2]: returns int_x^1 sqrt(2/(1-t^4)) dt.
/// Throws std::domain_error unless -1 <= x <= 1.
double inv_cn(double x);

/// G(z) = int_z^1 t^2 / sqrt(1-t^4) dt  (>= 0 on [-1,1]).
/// Throws std::domain_error unless -1 <= z <= 1.
double seg_integral(double z);

/// int_{x1}^{x2} cn(t)^2 dt by period reduction; every full period
/// contributes sqrt(2)*C, remainders map to seg_integral differences.
double cn2_integral(double x1, double x2);

struct Threshold {
    double M;      ///< max of 2z(kC + 2G(z)) over [0,1]
    double z_star; ///< its argmax
};

/// M_k and its argmax, by golden-section search (the target is strictly
/// concave on [0,1]). Memoized.
Threshold m_k(unsigned k);

} // namespace willmore::ell
