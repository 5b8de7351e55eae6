#include "ymx/elliptic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ymx {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_parameter(double m) {
    if (!(m < 1.0)) {
        throw std::domain_error("elliptic parameter must satisfy m < 1, got m = " +
                                std::to_string(m));
    }
}

/*
 * Jacobi elliptic functions for 0 < mc = 1 - m <= 1 by the descending
 * Gauss/Landen scale chain.
 *
 *   R. Bulirsch, Numerical calculation of elliptic integrals and
 *   elliptic functions, Numer. Math. 7, 78-90 (1965), routine sncndn.
 */
void sncndn_bulirsch(double x, double mc, double& sn, double& cn, double& dn) {
    static const double tol = std::sqrt(std::numeric_limits<double>::epsilon() * 0.01);
    constexpr int max_iter = 16;

    if (mc == 1.0) {  // m = 0
        sn = std::sin(x);
        cn = std::cos(x);
        dn = 1.0;
        return;
    }

    double am[max_iter];
    double an[max_iter];
    double a = 1.0;
    double c = 0.0;
    int l = 0;
    for (; l < max_iter; ++l) {
        am[l] = a;
        an[l] = mc = std::sqrt(mc);
        c = 0.5 * (a + mc);
        if (std::fabs(a - mc) <= tol * a) {
            ++l;
            break;
        }
        mc *= a;
        a = c;
    }

    x *= c;
    sn = std::sin(x);
    cn = std::cos(x);
    dn = 1.0;
    if (sn != 0.0) {
        a = cn / sn;
        c *= a;
        while (l-- > 0) {
            const double b = am[l];
            a *= c;
            c *= dn;
            dn = (an[l] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        sn = sn < 0.0 ? -a : a;
        cn = c * sn;
    }
}

}  // namespace

double complete_elliptic_k(double m) {
    require_parameter(m);
    // K(m) = pi / (2 agm(1, sqrt(1-m))); valid for any m < 1.
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    for (int i = 0; i < 64; ++i) {
        const double an = 0.5 * (a + b);
        const double bn = std::sqrt(a * b);
        a = an;
        b = bn;
        if (std::fabs(a - b) <= 2.0 * std::numeric_limits<double>::epsilon() * a) break;
    }
    return kPi / (a + b);
}

EllipticTriple jacobi_sn_cn_dn(double u, double m) {
    require_parameter(m);

    if (m == 0.0) {
        return {std::sin(u), std::cos(u), 1.0, u, m};
    }

    // Reduce modulo the real period 4K(m); dn has period 2K(m), so 4K
    // serves all three.  remainder() lands in [-2K, 2K].
    const double period = 4.0 * complete_elliptic_k(m);
    const double ur = std::remainder(u, period);

    double sn, cn, dn;
    if (m > 0.0) {
        sncndn_bulirsch(ur, 1.0 - m, sn, cn, dn);
    } else {
        // Negative parameter: map to mu in (0,1) with the reciprocal-
        // parameter (imaginary modulus) transformation, DLMF 22.17.3:
        //   mu = -m/(1-m),  v = u sqrt(1-m),
        //   sn(u|m) = sn(v|mu) / (sqrt(1-m) dn(v|mu)),
        //   cn(u|m) = cn(v|mu) / dn(v|mu),
        //   dn(u|m) = 1 / dn(v|mu).
        const double one_minus_m = 1.0 - m;
        const double mu = -m / one_minus_m;
        const double scale = std::sqrt(one_minus_m);
        double s, c, d;
        sncndn_bulirsch(ur * scale, 1.0 - mu, s, c, d);
        sn = s / (scale * d);
        cn = c / d;
        dn = 1.0 / d;
    }
    return {sn, cn, dn, u, m};
}

SnDerivatives sn_derivatives(double u, double m) {
    const EllipticTriple t = jacobi_sn_cn_dn(u, m);
    return {t.sn_d1(), t.sn_d2()};
}

}  // namespace ymx
