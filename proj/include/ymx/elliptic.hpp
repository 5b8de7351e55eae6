#ifndef YMX_ELLIPTIC_HPP
#define YMX_ELLIPTIC_HPP

namespace ymx {

/// The Jacobi elliptic functions sn, cn, dn evaluated at one point.
///
/// The second argument throughout this module is the elliptic PARAMETER
/// m = k^2, not the modulus k, so negative values are admissible on the
/// real line.  Identities maintained to ~1e-14:
///   sn^2 + cn^2 = 1,   dn^2 + m sn^2 = 1.
struct EllipticTriple {
    double sn;
    double cn;
    double dn;
    double u;  ///< argument
    double m;  ///< parameter m = k^2

    /// d(sn)/du = cn dn.
    double sn_d1() const { return cn * dn; }
    /// d^2(sn)/du^2 = 2 m sn^3 - (1 + m) sn.
    double sn_d2() const { return (2.0 * m * sn * sn - (1.0 + m)) * sn; }
};

/// Complete elliptic integral of the first kind,
/// K(m) = Integral_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt, for parameter m < 1.
/// Throws std::domain_error for m >= 1.
double complete_elliptic_k(double m);

/// sn, cn, dn at argument u for parameter m < 1.
/// Arguments are range-reduced modulo the real period 4K(m) first, so
/// accuracy is uniform over large |u|.  Throws std::domain_error for m >= 1.
EllipticTriple jacobi_sn_cn_dn(double u, double m);

/// First and second derivative of sn with respect to u, in closed form.
struct SnDerivatives {
    double d1;  ///< cn dn
    double d2;  ///< 2 m sn^3 - (1 + m) sn
};

SnDerivatives sn_derivatives(double u, double m);

}  // namespace ymx

#endif  // YMX_ELLIPTIC_HPP
