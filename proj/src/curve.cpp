#include "willmore/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gauss_kronrod.hpp"
#include "numeric_util.hpp"
#include "willmore/elliptic.hpp"

namespace willmore::curve {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void check_arc_param(const CurveParams& p, double s, const char* who) {
    if (!(s >= 0.0 && s <= p.L))
        throw std::domain_error(std::string(who) + ": arc parameter outside [0, L]");
}

using detail::ceil_snapped;
using detail::sign_of;

} // namespace

double curvature(const CurveParams& p, double s) {
    check_arc_param(p, s, "curvature");
    if (p.a == 0.0) return 0.0;
    return kSqrt2 * p.a * ell::jacobi(p.a * s + p.b).cn;
}

double curvature_derivative(const CurveParams& p, double s) {
    check_arc_param(p, s, "curvature_derivative");
    if (p.a == 0.0) return 0.0;
    const auto j = ell::jacobi(p.a * s + p.b);
    return -kSqrt2 * p.a * p.a * j.sn * j.dn;
}

Vec2 tangent_direction(const CurveParams& p, double s) {
    check_arc_param(p, s, "tangent_direction");
    if (p.a == 0.0) return p.Q.apply({1.0, 0.0});
    const auto jb = ell::jacobi(p.b);
    const auto js = ell::jacobi(p.a * s + p.b);
    const double cb2 = jb.cn * jb.cn;
    const double sb_db = jb.sn * jb.dn;
    const double cs2 = js.cn * js.cn;
    const double ss_ds = js.sn * js.dn;
    const double cos_theta = cb2 * cs2 + 2.0 * sb_db * ss_ds;
    const double sin_theta = -kSqrt2 * sb_db * cs2 + kSqrt2 * cb2 * ss_ds;
    return p.Q.apply({cos_theta, sin_theta});
}

Vec2 position(const CurveParams& p, double t) {
    check_arc_param(p, t, "position");
    if (t == 0.0) return p.A;
    if (p.a == 0.0) return p.A + t * p.Q.apply({1.0, 0.0});

    const auto jb = ell::jacobi(p.b);
    const double cb2 = jb.cn * jb.cn;
    const double sb_db = jb.sn * jb.dn;
    auto cos_t = [&](double s) {
        const auto j = ell::jacobi(p.a * s + p.b);
        return cb2 * j.cn * j.cn + 2.0 * sb_db * j.sn * j.dn;
    };
    auto sin_t = [&](double s) {
        const auto j = ell::jacobi(p.a * s + p.b);
        return -kSqrt2 * sb_db * j.cn * j.cn + kSqrt2 * cb2 * j.sn * j.dn;
    };

    const double half_period = 0.5 * ell::constants().T / p.a;
    const int panels = std::max(1, static_cast<int>(std::ceil(t / half_period)));
    const double tol = 1e-11 / panels;
    double ix = 0.0;
    double iy = 0.0;
    for (int k = 0; k < panels; ++k) {
        const double s0 = t * static_cast<double>(k) / panels;
        const double s1 = t * static_cast<double>(k + 1) / panels;
        ix += detail::adaptive_gk(cos_t, s0, s1, tol);
        iy += detail::adaptive_gk(sin_t, s0, s1, tol);
    }
    return p.A + p.Q.apply({ix, iy});
}

Vec2 endpoint_offset(const CurveParams& p) {
    if (p.a == 0.0) return {p.L, 0.0};
    const auto jb = ell::jacobi(p.b);
    const double end = p.b + p.a * p.L;
    const double alpha = ell::cn2_integral(p.b, end) / p.a;
    const double beta = kSqrt2 * (jb.cn - ell::jacobi(end).cn) / p.a;
    const double cb2 = jb.cn * jb.cn;
    const double cross = kSqrt2 * jb.sn * jb.dn;
    return {cb2 * alpha + cross * beta, -cross * alpha + cb2 * beta};
}

double energy(const CurveParams& p) {
    if (p.a == 0.0) return 0.0;
    return p.a * ell::cn2_integral(p.b, p.b + p.a * p.L);
}

std::optional<BranchSpec> classify_type(const CurveParams& p) {
    if (p.a == 0.0) return std::nullopt;
    const double T = ell::constants().T;
    const double phi = p.b + p.a * p.L;
    long m = static_cast<long>(std::floor((phi + 0.5 * T) / T));
    double btilde = phi - static_cast<double>(m) * T;
    if (btilde >= 0.5 * T - 1e-12 * T) { // canonical corner: represent cn = -1 as -T/2
        ++m;
        btilde -= T;
    } else if (btilde < -0.5 * T) {
        --m;
        btilde += T;
    }
    const long jc = ceil_snapped((p.b - btilde) / T);
    const long j = m - jc;
    if (j < 0) throw std::domain_error("classify_type: inconsistent phase data");
    return BranchSpec{sign_of(p.b), sign_of(btilde), static_cast<unsigned>(j)};
}

SymmetryClass classify_symmetry(const CurveParams& p, double tol) {
    if (p.a == 0.0) throw std::domain_error("classify_symmetry: straight line has no phase");
    const double half = 0.5 * ell::constants().T;
    const double v = p.a * p.L + 2.0 * p.b;
    if (tol < 0.0) tol = 1e-9 * (1.0 + std::fabs(v));
    const double n = std::round(v / half);
    if (std::fabs(v - n * half) <= tol) {
        const long ni = static_cast<long>(n);
        return (ni % 2 == 0) ? SymmetryClass::AxiallySymmetric : SymmetryClass::PointwiseSymmetric;
    }
    return SymmetryClass::Asymmetric;
}

IvpParams from_ivp(double kappa0, double kappa0_prime) {
    if (kappa0 == 0.0 && kappa0_prime == 0.0)
        throw std::domain_error("from_ivp: zero initial data generates the straight line");
    const double a =
        std::pow(0.25 * kappa0 * kappa0 * kappa0 * kappa0 + kappa0_prime * kappa0_prime, 0.25);
    const double arg = std::clamp(kappa0 / (kSqrt2 * a), -1.0, 1.0);
    double b = -static_cast<double>(sign_of(kappa0_prime)) * ell::inv_cn(arg);
    const double half = 0.5 * ell::constants().T;
    if (b >= half) b -= 2.0 * half;
    return {a, b};
}

std::vector<SamplePoint> sample(const CurveParams& p, std::size_t n) {
    if (n < 2) throw std::invalid_argument("sample: need at least two points");
    std::vector<SamplePoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = p.L * (static_cast<double>(i) / static_cast<double>(n - 1));
        out.push_back({s, position(p, s), curvature(p, s)});
    }
    return out;
}

} // namespace willmore::curve
