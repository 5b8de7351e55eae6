#ifndef YMX_DYNAMICS_HPP
#define YMX_DYNAMICS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "ymx/errors.hpp"

namespace ymx {

enum class SystemKind {
    quartic,  ///< one degree of freedom, phi'' = -2 g^2 phi^3
    triple,   ///< phi_1'' = -g^2 (phi_2^2 + phi_3^2) phi_1 and cyclic
};

/// Fixed-step trajectory; sample n lives at t = n * dt.  For the quartic
/// system only component 0 of each state is used.
struct Trajectory {
    SystemKind kind;
    double dt;
    double g;
    std::vector<std::array<double, 3>> phi;  ///< phi[n], n = 0..steps
    std::vector<std::array<double, 3>> vel;  ///< matching velocities
    double energy0;

    std::size_t samples() const { return phi.size(); }
    double time(std::size_t n) const { return static_cast<double>(n) * dt; }
    /// Conserved energy recomputed from the state at sample n.
    double energy_at(std::size_t n) const;
    /// max_n |energy_at(n) - energy0|.
    double energy_drift() const;
};

/// Energy functions: quartic E = v^2/2 + (g^2/2) phi^4; triple
/// E = sum v_i^2/2 + (g^2/2)(phi1^2 phi2^2 + phi2^2 phi3^2 + phi3^2 phi1^2).
double quartic_energy(double phi, double v, double g);
double triple_energy(const std::array<double, 3>& phi, const std::array<double, 3>& v, double g);

/// Integrates phi'' = -2 g^2 phi^3 by velocity-Verlet (kick-drift-kick),
/// a time-reversible symplectic scheme with O(dt^2) energy error.
/// Throws TrajectoryBlowUp if the state leaves [-1e12, 1e12] or turns
/// non-finite; std::invalid_argument for dt <= 0 or steps < 1.
Trajectory evolve_quartic(double phi0, double v0, double g, double dt, long steps);

/// Same scheme for the three-component system
/// phi_i'' = -g^2 (phi_j^2 + phi_k^2) phi_i, (i,j,k) cyclic.
Trajectory evolve_triple(const std::array<double, 3>& phi0, const std::array<double, 3>& v0,
                         double g, double dt, long steps);

/// Mean period from successive upward zero crossings of a uniformly
/// sampled signal (sample spacing dt), with linear interpolation of each
/// crossing time.  Throws InsufficientCrossings when fewer than two
/// upward crossings exist.
double measure_period_sampled(const std::vector<double>& values, double dt);

/// measure_period_sampled applied to one component of a trajectory.
double measure_period(const Trajectory& traj, int component = 0);

/// One row of a dispersion scan: the wave's temporal frequency measured
/// from zero crossings against the value demanded by p0^2 = |p|^2 + mu^2 g.
struct DispersionPoint {
    double pnorm;
    double p0_expected;
    double p0_measured;
    double abs_error;
};

/// For each |p|, samples the oscillation sn(p0 t + theta, -1) of the
/// equal-amplitude solution at the spatial origin over `periods` periods
/// with `samples_per_period` points each, measures the period by zero
/// crossings, and reports p0_measured = 4 K(-1) / T.
std::vector<DispersionPoint> dispersion_scan(double mu, double g,
                                             const std::vector<double>& pnorms,
                                             int samples_per_period = 2000, int periods = 6,
                                             double theta = 0.0);

/// Least-squares intercept b of p0_measured^2 = |p|^2 + b with unit
/// slope: the mean of p0_measured^2 - |p|^2.  Recovers mu^2 g.
double dispersion_intercept(const std::vector<DispersionPoint>& points);

}  // namespace ymx

#endif  // YMX_DYNAMICS_HPP
