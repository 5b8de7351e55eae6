#ifndef YMX_SOLUTIONS_HPP
#define YMX_SOLUTIONS_HPP

#include <array>

#include "ymx/errors.hpp"
#include "ymx/four_vector.hpp"

namespace ymx {

/// Relative tolerance at which the mass-shell condition p^2 = mu^2 g is
/// enforced on construction.
inline constexpr double kDispersionRelTol = 1e-9;

/// A candidate exact configuration: the three diagonal components
///   A^1_1 = X sn(u, -1),  A^2_2 = Y sn(u, -1),  A^3_3 = Z sn(u, -1),
/// u = p.x + theta, with all other components zero.
struct DiagonalAnsatz {
    double X;
    double Y;
    double Z;
    FourVector p;  ///< on-shell momentum, p^2 = mu^2 g
    double theta;  ///< phase offset of the argument
    double mu;     ///< integration constant, energy units
    double g;      ///< coupling
    double alpha;  ///< gauge-fixing parameter

    std::array<double, 3> amplitudes() const { return {X, Y, Z}; }
};

/// Checked constructor: throws DispersionViolation if p is off shell
/// beyond kDispersionRelTol, std::invalid_argument for bad mu/g/alpha.
DiagonalAnsatz make_diagonal_ansatz(double X, double Y, double Z, const FourVector& p,
                                    double theta, double mu, double g, double alpha);

/// Positive energy component closing the dispersion relation:
/// p0 = sqrt(|p_vec|^2 + mu^2 g).
double dispersion_p0(double mu, double g, const std::array<double, 3>& spatial_p);

/// Builds the on-shell momentum (dispersion_p0(mu,g,pv), pv).
FourVector on_shell_momentum(double mu, double g, const std::array<double, 3>& spatial_p);

struct Amplitudes {
    double X;
    double Y;
    double Z;
};

/// Solves the amplitude system
///   Y^2 + Z^2 = c1,  X^2 + Z^2 = c2,  X^2 + Y^2 = c3,
///   c_k = (2/g^2)(1 - 1/alpha) p_k^2 + 2 mu^2 / g,
/// for the unique nonnegative roots.  Throws DispersionViolation if p is
/// off shell, NoRealSolution if any squared amplitude is negative.
Amplitudes solve_amplitudes(double mu, double g, double alpha, const FourVector& p);

/// Right-hand sides c1, c2, c3 of the amplitude system.
std::array<double, 3> amplitude_rhs(double mu, double g, double alpha, const FourVector& p);

/// Closed-form squared amplitudes (X^2, Y^2, Z^2); may be negative.
std::array<double, 3> amplitude_squares(double mu, double g, double alpha, const FourVector& p);

/// Full ansatz for arbitrary gauge parameter: on-shell momentum from the
/// spatial components, amplitudes from solve_amplitudes.
DiagonalAnsatz solved_ansatz(double mu, double g, double alpha,
                             const std::array<double, 3>& spatial_p, double theta = 0.0);

/// Lorenz/Landau gauge (alpha = 1) solution: X = Y = Z = mu / sqrt(g),
/// the amplitude that annihilates the diagonal residual.
DiagonalAnsatz landau_solution(double mu, double g, const std::array<double, 3>& spatial_p,
                               double theta = 0.0);

/// The massless quartic scalar field solution
///   phi = mu (2/lambda)^{1/4} sn(p.x + theta, -1),  p^2 = mu^2 sqrt(lambda/2).
struct ScalarSolution {
    double mu;
    double lambda;
    FourVector p;
    double theta;

    double amplitude() const;
};

ScalarSolution make_scalar_solution(double mu, double lambda,
                                    const std::array<double, 3>& spatial_p, double theta = 0.0);

/// d^2 phi + lambda phi^3 at x, evaluated in closed form via the sn jet.
/// Identically zero (to rounding) for a valid ScalarSolution.
double scalar_residual(const ScalarSolution& s, const FourVector& x);

/// Same residual with an explicit amplitude, for probing perturbed fields.
double scalar_field_residual(double amplitude, double lambda, const FourVector& p, double theta,
                             const FourVector& x);

/// The scalar -> gauge-field embedding A^k_k(x) = f_k phi(x) with
/// lambda = 2 g^2 (the SU(2) value of N g^2), f_k the amplitude ratio.
struct ScalarMap {
    ScalarSolution scalar;
    DiagonalAnsatz ansatz;
    std::array<double, 3> f;
};

ScalarMap map_scalar_to_su2(double mu, double g, const std::array<double, 3>& spatial_p,
                            double alpha, double theta = 0.0);

}  // namespace ymx

#endif  // YMX_SOLUTIONS_HPP
