#include "ymx/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ymx/elliptic.hpp"
#include "ymx/errors.hpp"
#include "ymx/solutions.hpp"

namespace ymx {

namespace {

constexpr double kBlowUp = 1e12;

// The quartic acceleration is written so that the equal-component triple
// system reproduces it bit for bit: (p^2 + p^2) doubles exactly, and the
// real products agree, so both round identically.
inline double quartic_accel(double phi, double g) {
    return -(g * g) * (phi * phi + phi * phi) * phi;
}

inline std::array<double, 3> triple_accel(const std::array<double, 3>& phi, double g) {
    const double q0 = phi[0] * phi[0];
    const double q1 = phi[1] * phi[1];
    const double q2 = phi[2] * phi[2];
    return {-(g * g) * (q1 + q2) * phi[0], -(g * g) * (q2 + q0) * phi[1],
            -(g * g) * (q0 + q1) * phi[2]};
}

void check_state(const std::array<double, 3>& phi, const std::array<double, 3>& v, long step,
                 double t) {
    double worst = 0.0;
    bool bad = false;
    for (int i = 0; i < 3; ++i) {
        for (double s : {phi[i], v[i]}) {
            if (!std::isfinite(s) || std::fabs(s) > kBlowUp) bad = true;
            if (std::isfinite(s)) worst = std::max(worst, std::fabs(s));
            else worst = std::numeric_limits<double>::infinity();
        }
    }
    if (bad) throw TrajectoryBlowUp(step, t, worst);
}

void require_run(double dt, long steps) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (steps < 1) throw std::invalid_argument("need at least one integration step");
}

}  // namespace

double quartic_energy(double phi, double v, double g) {
    const double p2 = phi * phi;
    return 0.5 * v * v + 0.5 * (g * g) * p2 * p2;
}

double triple_energy(const std::array<double, 3>& phi, const std::array<double, 3>& v, double g) {
    const double q0 = phi[0] * phi[0];
    const double q1 = phi[1] * phi[1];
    const double q2 = phi[2] * phi[2];
    const double kin = 0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return kin + 0.5 * (g * g) * (q0 * q1 + q1 * q2 + q2 * q0);
}

double Trajectory::energy_at(std::size_t n) const {
    if (kind == SystemKind::quartic) return quartic_energy(phi[n][0], vel[n][0], g);
    return triple_energy(phi[n], vel[n], g);
}

double Trajectory::energy_drift() const {
    double drift = 0.0;
    for (std::size_t n = 0; n < samples(); ++n) {
        drift = std::max(drift, std::fabs(energy_at(n) - energy0));
    }
    return drift;
}

Trajectory evolve_quartic(double phi0, double v0, double g, double dt, long steps) {
    require_run(dt, steps);
    Trajectory traj{SystemKind::quartic, dt, g, {}, {}, quartic_energy(phi0, v0, g)};
    traj.phi.reserve(static_cast<std::size_t>(steps) + 1);
    traj.vel.reserve(static_cast<std::size_t>(steps) + 1);

    double phi = phi0;
    double v = v0;
    traj.phi.push_back({phi, 0.0, 0.0});
    traj.vel.push_back({v, 0.0, 0.0});

    double a = quartic_accel(phi, g);
    for (long n = 1; n <= steps; ++n) {
        const double vh = v + 0.5 * dt * a;  // kick
        phi += dt * vh;                      // drift
        a = quartic_accel(phi, g);
        v = vh + 0.5 * dt * a;               // kick
        check_state({phi, 0.0, 0.0}, {v, 0.0, 0.0}, n, static_cast<double>(n) * dt);
        traj.phi.push_back({phi, 0.0, 0.0});
        traj.vel.push_back({v, 0.0, 0.0});
    }
    return traj;
}

Trajectory evolve_triple(const std::array<double, 3>& phi0, const std::array<double, 3>& v0,
                         double g, double dt, long steps) {
    require_run(dt, steps);
    Trajectory traj{SystemKind::triple, dt, g, {}, {}, triple_energy(phi0, v0, g)};
    traj.phi.reserve(static_cast<std::size_t>(steps) + 1);
    traj.vel.reserve(static_cast<std::size_t>(steps) + 1);

    std::array<double, 3> phi = phi0;
    std::array<double, 3> v = v0;
    traj.phi.push_back(phi);
    traj.vel.push_back(v);

    std::array<double, 3> a = triple_accel(phi, g);
    for (long n = 1; n <= steps; ++n) {
        std::array<double, 3> vh;
        for (int i = 0; i < 3; ++i) vh[i] = v[i] + 0.5 * dt * a[i];
        for (int i = 0; i < 3; ++i) phi[i] += dt * vh[i];
        a = triple_accel(phi, g);
        for (int i = 0; i < 3; ++i) v[i] = vh[i] + 0.5 * dt * a[i];
        check_state(phi, v, n, static_cast<double>(n) * dt);
        traj.phi.push_back(phi);
        traj.vel.push_back(v);
    }
    return traj;
}

double measure_period_sampled(const std::vector<double>& values, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample spacing must be positive");

    // Upward crossing between samples i, i+1 when f_i < 0 <= f_{i+1};
    // crossing time by linear interpolation.
    std::vector<double> crossings;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i] < 0.0 && values[i + 1] >= 0.0) {
            const double frac = -values[i] / (values[i + 1] - values[i]);
            crossings.push_back((static_cast<double>(i) + frac) * dt);
        }
    }
    if (crossings.size() < 2) throw InsufficientCrossings(static_cast<int>(crossings.size()));
    // Mean of successive differences telescopes to (last - first)/(n - 1).
    return (crossings.back() - crossings.front()) /
           static_cast<double>(crossings.size() - 1);
}

double measure_period(const Trajectory& traj, int component) {
    if (component < 0 || component > 2) throw std::invalid_argument("component must be 0, 1 or 2");
    std::vector<double> series;
    series.reserve(traj.samples());
    for (const auto& s : traj.phi) series.push_back(s[component]);
    return measure_period_sampled(series, traj.dt);
}

std::vector<DispersionPoint> dispersion_scan(double mu, double g,
                                             const std::vector<double>& pnorms,
                                             int samples_per_period, int periods, double theta) {
    if (samples_per_period < 8) throw std::invalid_argument("need at least 8 samples per period");
    if (periods < 2) throw std::invalid_argument("need at least 2 periods");
    if (!(mu > 0.0) || !(g > 0.0)) throw std::invalid_argument("mu and g must be positive");

    const double quarter = complete_elliptic_k(-1.0);
    std::vector<DispersionPoint> out;
    out.reserve(pnorms.size());
    for (double pn : pnorms) {
        const double p0e = dispersion_p0(mu, g, {pn, 0.0, 0.0});
        // Field history at the spatial origin: sn(p0 t + theta, -1).
        const double t_period = 4.0 * quarter / p0e;
        const double dt = t_period / samples_per_period;
        const long nsamp = static_cast<long>(samples_per_period) * periods + 1;
        std::vector<double> series;
        series.reserve(static_cast<std::size_t>(nsamp));
        for (long n = 0; n < nsamp; ++n) {
            const double t = static_cast<double>(n) * dt;
            series.push_back(jacobi_sn_cn_dn(p0e * t + theta, -1.0).sn);
        }
        const double T = measure_period_sampled(series, dt);
        const double p0m = 4.0 * quarter / T;
        out.push_back({pn, p0e, p0m, std::fabs(p0m - p0e)});
    }
    return out;
}

double dispersion_intercept(const std::vector<DispersionPoint>& points) {
    if (points.empty()) throw std::invalid_argument("empty dispersion scan");
    double acc = 0.0;
    for (const auto& pt : points) {
        acc += pt.p0_measured * pt.p0_measured - pt.pnorm * pt.pnorm;
    }
    return acc / static_cast<double>(points.size());
}

}  // namespace ymx
