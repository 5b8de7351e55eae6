#include "ymx/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ymx/elliptic.hpp"
#include "ymx/errors.hpp"

namespace ymx {

namespace {

void require_params(double mu, double g, double alpha) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
    if (alpha == 0.0 || !std::isfinite(alpha)) {
        throw std::invalid_argument("gauge parameter alpha must be finite and nonzero");
    }
}

void require_on_shell(const FourVector& p, double mu, double g) {
    const double p2 = minkowski_dot(p, p);
    const double expected = mu * mu * g;
    if (std::fabs(p2 - expected) > kDispersionRelTol * expected) {
        throw DispersionViolation(p2, expected);
    }
}

}  // namespace

DiagonalAnsatz make_diagonal_ansatz(double X, double Y, double Z, const FourVector& p,
                                    double theta, double mu, double g, double alpha) {
    require_params(mu, g, alpha);
    require_on_shell(p, mu, g);
    return {X, Y, Z, p, theta, mu, g, alpha};
}

double dispersion_p0(double mu, double g, const std::array<double, 3>& spatial_p) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (!(g > 0.0)) throw std::invalid_argument("g must be positive");
    const double pv2 = spatial_p[0] * spatial_p[0] + spatial_p[1] * spatial_p[1] +
                       spatial_p[2] * spatial_p[2];
    return std::sqrt(pv2 + mu * mu * g);
}

FourVector on_shell_momentum(double mu, double g, const std::array<double, 3>& spatial_p) {
    return {dispersion_p0(mu, g, spatial_p), spatial_p[0], spatial_p[1], spatial_p[2]};
}

std::array<double, 3> amplitude_rhs(double mu, double g, double alpha, const FourVector& p) {
    require_params(mu, g, alpha);
    const double gauge = (2.0 / (g * g)) * (1.0 - 1.0 / alpha);
    const double base = 2.0 * mu * mu / g;
    return {gauge * p.c[1] * p.c[1] + base, gauge * p.c[2] * p.c[2] + base,
            gauge * p.c[3] * p.c[3] + base};
}

std::array<double, 3> amplitude_squares(double mu, double g, double alpha, const FourVector& p) {
    const auto c = amplitude_rhs(mu, g, alpha, p);
    // Invert  Y^2+Z^2 = c1,  X^2+Z^2 = c2,  X^2+Y^2 = c3.
    return {0.5 * (c[1] + c[2] - c[0]), 0.5 * (c[0] + c[2] - c[1]), 0.5 * (c[0] + c[1] - c[2])};
}

Amplitudes solve_amplitudes(double mu, double g, double alpha, const FourVector& p) {
    require_params(mu, g, alpha);
    require_on_shell(p, mu, g);
    auto sq = amplitude_squares(mu, g, alpha, p);

    // Cancellation in c_j + c_k - c_i can leave a square a few ulp below
    // zero when the exact value vanishes; clamp those, reject the rest.
    double scale = 0.0;
    for (double s : sq) scale = std::max(scale, std::fabs(s));
    const double slop = 64.0 * std::numeric_limits<double>::epsilon() * scale;

    static const char* names[3] = {"X", "Y", "Z"};
    std::string negative;
    for (int k = 0; k < 3; ++k) {
        if (sq[k] < 0.0) {
            if (sq[k] >= -slop) {
                sq[k] = 0.0;
            } else {
                if (!negative.empty()) negative += ',';
                negative += names[k];
            }
        }
    }
    if (!negative.empty()) throw NoRealSolution(sq, negative);
    return {std::sqrt(sq[0]), std::sqrt(sq[1]), std::sqrt(sq[2])};
}

DiagonalAnsatz solved_ansatz(double mu, double g, double alpha,
                             const std::array<double, 3>& spatial_p, double theta) {
    const FourVector p = on_shell_momentum(mu, g, spatial_p);
    const Amplitudes amp = solve_amplitudes(mu, g, alpha, p);
    return make_diagonal_ansatz(amp.X, amp.Y, amp.Z, p, theta, mu, g, alpha);
}

DiagonalAnsatz landau_solution(double mu, double g, const std::array<double, 3>& spatial_p,
                               double theta) {
    const double A = mu / std::sqrt(g);
    const FourVector p = on_shell_momentum(mu, g, spatial_p);
    return make_diagonal_ansatz(A, A, A, p, theta, mu, g, 1.0);
}

double ScalarSolution::amplitude() const { return mu * std::pow(2.0 / lambda, 0.25); }

ScalarSolution make_scalar_solution(double mu, double lambda,
                                    const std::array<double, 3>& spatial_p, double theta) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    const double pv2 = spatial_p[0] * spatial_p[0] + spatial_p[1] * spatial_p[1] +
                       spatial_p[2] * spatial_p[2];
    const double p0 = std::sqrt(pv2 + mu * mu * std::sqrt(0.5 * lambda));
    return {mu, lambda, {p0, spatial_p[0], spatial_p[1], spatial_p[2]}, theta};
}

double scalar_field_residual(double amplitude, double lambda, const FourVector& p, double theta,
                             const FourVector& x) {
    const double u = minkowski_dot(p, x) + theta;
    const EllipticTriple t = jacobi_sn_cn_dn(u, -1.0);
    const double p2 = minkowski_dot(p, p);
    const double phi = amplitude * t.sn;
    return amplitude * p2 * t.sn_d2() + lambda * phi * phi * phi;
}

double scalar_residual(const ScalarSolution& s, const FourVector& x) {
    return scalar_field_residual(s.amplitude(), s.lambda, s.p, s.theta, x);
}

ScalarMap map_scalar_to_su2(double mu, double g, const std::array<double, 3>& spatial_p,
                            double alpha, double theta) {
    // Two colors contribute to each equation of motion, so the scalar
    // quartic coupling matching the gauge cubic term is lambda = 2 g^2;
    // both dispersion relations then read p^2 = mu^2 g.
    const double lambda = 2.0 * g * g;
    ScalarMap map{make_scalar_solution(mu, lambda, spatial_p, theta),
                  solved_ansatz(mu, g, alpha, spatial_p, theta),
                  {}};
    const double As = map.scalar.amplitude();
    map.f = {map.ansatz.X / As, map.ansatz.Y / As, map.ansatz.Z / As};
    return map;
}

}  // namespace ymx
