#include "willmore/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "tanh_sinh.hpp"

namespace willmore::ell {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// int_z^1 t^2 / sqrt(1-t^4) dt with 1-t^4 factored so that the distances
// to both singular points t = +-1 enter without cancellation.
double seg_raw(double z) {
    if (z == 1.0) return 0.0;
    const double zp1 = 1.0 + z;
    return detail::tanh_sinh(
        [zp1](double t, double da, double db) {
            const double omt = db;       // 1 - t
            const double opt = zp1 + da; // 1 + t
            return t * t / std::sqrt(omt * opt * (1.0 + t * t));
        },
        z, 1.0);
}

// int_x^1 sqrt(2/(1-t^4)) dt, the defining integral of inv_cn.
double inv_cn_raw(double x) {
    if (x == 1.0) return 0.0;
    const double xp1 = 1.0 + x;
    return detail::tanh_sinh(
        [xp1](double t, double da, double db) {
            const double omt = db;
            const double opt = xp1 + da;
            return kSqrt2 / std::sqrt(omt * opt * (1.0 + t * t));
        },
        x, 1.0);
}

} // namespace

const Constants& constants() {
    static const Constants k = [] {
        Constants c;
        c.T = 4.0 * inv_cn_raw(0.0);
        c.C = 4.0 * seg_raw(0.0);
        return c;
    }();
    return k;
}

Jacobi jacobi(double u) {
    if (!std::isfinite(u)) throw std::domain_error("jacobi: non-finite argument");
    const double period = constants().T;
    const double r = std::remainder(u, period); // in [-T/2, T/2]

    // Descending Landen/AGM at k^2 = 1/2, iterated until the scale c_n
    // drops below 1e-16, then the phase back-recursion of A&S 16.4.
    constexpr int kMax = 24;
    double as[kMax];
    double cs[kMax];
    double an = 1.0;
    double bn = std::sqrt(0.5);
    double cn_scale = std::sqrt(0.5);
    int n = 0;
    as[0] = an;
    cs[0] = cn_scale;
    while (cn_scale > 1e-16 && n < kMax - 1) {
        const double an1 = 0.5 * (an + bn);
        const double bn1 = std::sqrt(an * bn);
        cn_scale = 0.5 * (an - bn);
        ++n;
        as[n] = an1;
        cs[n] = cn_scale;
        an = an1;
        bn = bn1;
    }
    double phi = std::ldexp(1.0, n) * as[n] * r;
    for (int i = n; i >= 1; --i) {
        const double s = std::clamp(cs[i] / as[i] * std::sin(phi), -1.0, 1.0);
        phi = 0.5 * (phi + std::asin(s));
    }
    Jacobi out;
    out.sn = std::sin(phi);
    out.cn = std::cos(phi);
    out.dn = std::sqrt(1.0 - 0.5 * out.sn * out.sn); // dn^2 = 1 - sn^2/2 at this modulus
    return out;
}

double cn(double u) { return jacobi(u).cn; }

double inv_cn(double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("inv_cn: argument outside [-1,1]");
    return inv_cn_raw(x);
}

double seg_integral(double z) {
    if (!(z >= -1.0 && z <= 1.0)) throw std::domain_error("seg_integral: argument outside [-1,1]");
    return seg_raw(z);
}

double cn2_integral(double x1, double x2) {
    if (!std::isfinite(x1) || !std::isfinite(x2))
        throw std::domain_error("cn2_integral: non-finite bounds");
    const Constants& k = constants();
    const double half_period = 0.5 * k.T;
    const double block = k.C / kSqrt2; // int over one half period of cn^2

    // primitive of cn^2 at x, via int_0^r cn^2 = sqrt(2) G(cn(r)) on [0, T/2)
    auto primitive = [&](double x) {
        const double n = std::floor(x / half_period);
        const double r = x - n * half_period;
        const double c = std::clamp(jacobi(r).cn, -1.0, 1.0);
        return n * block + kSqrt2 * seg_raw(c);
    };
    return primitive(x2) - primitive(x1);
}

Threshold m_k(unsigned k) {
    static std::mutex mu;
    static std::vector<Threshold> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (k < cache.size() && cache[k].M >= 0.0) return cache[k];
    }

    const double kc = k * constants().C;
    auto target = [kc](double z) { return 2.0 * z * (kc + 2.0 * seg_raw(z)); };

    // golden-section maximum; the target is strictly concave on [0,1]
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = 0.0;
    double hi = 1.0;
    double z1 = hi - gr * (hi - lo);
    double z2 = lo + gr * (hi - lo);
    double f1 = target(z1);
    double f2 = target(z2);
    while (hi - lo > 1e-12) {
        if (f1 > f2) {
            hi = z2;
            z2 = z1;
            f2 = f1;
            z1 = hi - gr * (hi - lo);
            f1 = target(z1);
        } else {
            lo = z1;
            z1 = z2;
            f1 = f2;
            z2 = lo + gr * (hi - lo);
            f2 = target(z2);
        }
    }
    const double zs = 0.5 * (lo + hi);
    Threshold out{target(zs), zs};

    std::lock_guard<std::mutex> lock(mu);
    if (cache.size() <= k) cache.resize(k + 1, Threshold{-1.0, -1.0});
    cache[k] = out;
    return out;
}

} // namespace willmore::ell
