#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "ymx/elliptic.hpp"
#include "ymx/solutions.hpp"
#include "ymx/su2_field.hpp"

using ymx::amplitude_rhs;
using ymx::amplitude_squares;
using ymx::dispersion_p0;
using ymx::DispersionViolation;
using ymx::FourVector;
using ymx::GaugeCoupling;
using ymx::landau_solution;
using ymx::make_diagonal_ansatz;
using ymx::make_scalar_solution;
using ymx::map_scalar_to_su2;
using ymx::NoRealSolution;
using ymx::on_shell_momentum;
using ymx::solve_amplitudes;
using ymx::solved_ansatz;
using ymx::testing::oracle_solve3;
using ymx::testing::Rand;

TEST_CASE("dispersion_p0: closed values") {
    CHECK(dispersion_p0(1.0, 1.0, {0, 0, 0}) == 1.0);
    CHECK(dispersion_p0(1.0, 4.0, {0, 0, 0}) == 2.0);
    CHECK(std::abs(dispersion_p0(1.0, 1.0, {3, 0, 0}) - std::sqrt(10.0)) <= 1e-15);
    CHECK(std::abs(dispersion_p0(0.5, 2.0, {0.1, 0.2, 0.2}) -
                   std::sqrt(0.09 + 0.25 * 2.0)) <= 1e-15);
    const FourVector p = on_shell_momentum(1.3, 0.7, {0.4, -0.2, 0.1});
    CHECK(std::abs(ymx::minkowski_dot(p, p) - 1.3 * 1.3 * 0.7) <= 1e-14);
}

TEST_CASE("make_diagonal_ansatz: parameter checking") {
    const FourVector on{1, 0, 0, 0};
    CHECK_NOTHROW(make_diagonal_ansatz(1, 1, 1, on, 0.0, 1.0, 1.0, 1.0));
    CHECK_THROWS_AS(make_diagonal_ansatz(1, 1, 1, FourVector{2, 0, 0, 0}, 0, 1, 1, 1),
                    DispersionViolation);
    CHECK_THROWS_AS(make_diagonal_ansatz(1, 1, 1, on, 0, -1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_diagonal_ansatz(1, 1, 1, on, 0, 1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_diagonal_ansatz(1, 1, 1, on, 0, 1.0, 1.0, 0.0), std::invalid_argument);

    try {
        make_diagonal_ansatz(1, 1, 1, FourVector{2, 0, 0, 0}, 0, 1, 1, 1);
        FAIL("expected DispersionViolation");
    } catch (const DispersionViolation& e) {
        CHECK(e.p_squared() == 4.0);
        CHECK(e.expected() == 1.0);
    }
}

TEST_CASE("solve_amplitudes: temporal momentum gives the isotropic amplitude") {
    // p = (1,0,0,0), mu = g = 1: every gauge parameter sees c_k = 2, so
    // X = Y = Z = 1.
    for (double alpha : {1.0, 2.0, 0.5, 10.0, -3.0}) {
        const auto amp = solve_amplitudes(1.0, 1.0, alpha, FourVector{1, 0, 0, 0});
        CAPTURE(alpha);
        CHECK(std::abs(amp.X - 1.0) <= 1e-15);
        CHECK(std::abs(amp.Y - 1.0) <= 1e-15);
        CHECK(std::abs(amp.Z - 1.0) <= 1e-15);
    }
    // General (mu, g): amplitude mu / sqrt(g) for p = (mu sqrt(g), 0, 0, 0).
    const double mu = 2.0, g = 0.5;
    const auto amp = solve_amplitudes(mu, g, 3.7, FourVector{mu * std::sqrt(g), 0, 0, 0});
    CHECK(std::abs(amp.X - mu / std::sqrt(g)) <= 1e-14);
    CHECK(std::abs(amp.Y - amp.X) <= 1e-15);
    CHECK(std::abs(amp.Z - amp.X) <= 1e-15);
}

TEST_CASE("solve_amplitudes: agreement with a linear-solve oracle") {
    // The three closed-form squares solve Y^2+Z^2 = c1, X^2+Z^2 = c2,
    // X^2+Y^2 = c3; cross-check against Gaussian elimination.
    Rand rng(201);
    int solved_cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const double mu = rng.uniform(0.2, 2.0);
        const double g = rng.uniform(0.2, 2.0);
        const double alpha = rng.uniform(0.15, 4.0);
        const std::array<double, 3> pv{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                                       rng.uniform(-1.5, 1.5)};
        const FourVector p = on_shell_momentum(mu, g, pv);
        const auto c = amplitude_rhs(mu, g, alpha, p);
        const std::array<std::array<double, 3>, 3> mat{{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
        const auto oracle = oracle_solve3(mat, c);
        const auto squares = amplitude_squares(mu, g, alpha, p);
        const double scale = std::max({1.0, std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
        for (int k = 0; k < 3; ++k) {
            CHECK(std::abs(squares[k] - oracle[k]) <= 1e-14 * scale);
        }
        const bool oracle_negative =
            oracle[0] < -1e-13 * scale || oracle[1] < -1e-13 * scale || oracle[2] < -1e-13 * scale;
        try {
            const auto amp = solve_amplitudes(mu, g, alpha, p);
            CHECK(!oracle_negative);
            CHECK(std::abs(amp.X * amp.X - std::max(0.0, oracle[0])) <= 1e-13 * scale);
            CHECK(std::abs(amp.Y * amp.Y - std::max(0.0, oracle[1])) <= 1e-13 * scale);
            CHECK(std::abs(amp.Z * amp.Z - std::max(0.0, oracle[2])) <= 1e-13 * scale);
            ++solved_cases;
        } catch (const NoRealSolution& e) {
            CHECK(std::min({oracle[0], oracle[1], oracle[2]}) < 0.0);
            CHECK(!e.which().empty());
        }
    }
    CHECK(solved_cases > 50);  // the sweep must exercise both branches
}

TEST_CASE("solve_amplitudes: named negative squares") {
    // mu = g = 1, alpha = 0.1, p = (sqrt(2), 1, 0, 0): c = (2 - 18, 2, 2)
    // = (-16, 2, 2), squares X^2 = 10, Y^2 = Z^2 = -8.
    const FourVector p{std::sqrt(2.0), 1, 0, 0};
    const auto squares = amplitude_squares(1.0, 1.0, 0.1, p);
    CHECK(std::abs(squares[0] - 10.0) <= 1e-12);
    CHECK(std::abs(squares[1] + 8.0) <= 1e-12);
    CHECK(std::abs(squares[2] + 8.0) <= 1e-12);
    try {
        solve_amplitudes(1.0, 1.0, 0.1, p);
        FAIL("expected NoRealSolution");
    } catch (const NoRealSolution& e) {
        CHECK(e.which() == "Y,Z");
        CHECK(std::abs(e.squares()[0] - 10.0) <= 1e-12);
        CHECK(std::abs(e.squares()[1] + 8.0) <= 1e-12);
        CHECK(std::abs(e.squares()[2] + 8.0) <= 1e-12);
    }
}

TEST_CASE("solve_amplitudes: off-shell momenta are rejected first") {
    CHECK_THROWS_AS(solve_amplitudes(1.0, 1.0, 1.0, FourVector{1.5, 0, 0, 0}),
                    DispersionViolation);
}

TEST_CASE("amplitude splitting identity") {
    // X^2 - Y^2 = c2 - c1 = (2/g^2)(1 - 1/alpha)(p2^2 - p1^2), cyclically.
    Rand rng(202);
    for (int trial = 0; trial < 100; ++trial) {
        const double mu = rng.uniform(0.5, 1.5);
        const double g = rng.uniform(0.5, 1.5);
        const double alpha = rng.uniform(0.8, 3.0);
        const std::array<double, 3> pv{rng.uniform(-1, 1), rng.uniform(-1, 1),
                                       rng.uniform(-1, 1)};
        const FourVector p = on_shell_momentum(mu, g, pv);
        const auto c = amplitude_rhs(mu, g, alpha, p);
        const double cmax = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
        ymx::Amplitudes amp{};
        try {
            amp = solve_amplitudes(mu, g, alpha, p);
        } catch (const NoRealSolution&) {
            continue;
        }
        const double coef = (2.0 / (g * g)) * (1.0 - 1.0 / alpha);
        const std::array<double, 3> sq{amp.X * amp.X, amp.Y * amp.Y, amp.Z * amp.Z};
        // X^2 - Y^2 = c2 - c1, so the momentum components enter with the
        // opposite orientation to the amplitude indices.
        const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
        for (const auto& pr : pairs) {
            const int i = pr[0], j = pr[1];
            const double lhs = sq[i] - sq[j];
            const double rhs = coef * (p[j + 1] * p[j + 1] - p[i + 1] * p[i + 1]);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(rhs) + cmax));
        }
    }
}

TEST_CASE("alpha = 1 collapses the three amplitudes") {
    Rand rng(203);
    for (int trial = 0; trial < 20; ++trial) {
        const std::array<double, 3> pv{rng.uniform(-2, 2), rng.uniform(-2, 2),
                                       rng.uniform(-2, 2)};
        const auto a = solved_ansatz(1.1, 0.9, 1.0, pv);
        CHECK(a.X == a.Y);
        CHECK(a.Y == a.Z);
        CHECK(std::abs(a.X - 1.1 / std::sqrt(0.9)) <= 1e-14);
    }
}

TEST_CASE("vanishing spatial momentum collapses the amplitudes for every alpha") {
    for (double alpha : {0.3, 1.0, 2.0, 25.0}) {
        const auto a = solved_ansatz(1.4, 2.2, alpha, {0, 0, 0});
        CAPTURE(alpha);
        CHECK(a.X == a.Y);
        CHECK(a.Y == a.Z);
        CHECK(std::abs(a.X - 1.4 / std::sqrt(2.2)) <= 1e-14);
    }
}

TEST_CASE("landau_solution") {
    const auto a = landau_solution(2.0, 4.0, {0, 0, 0});
    CHECK(a.X == 1.0);
    CHECK(a.Y == 1.0);
    CHECK(a.Z == 1.0);
    CHECK(a.alpha == 1.0);
    CHECK(a.p[0] == 4.0);  // sqrt(mu^2 g) = sqrt(16)

    const auto b = landau_solution(1.0, 1.0, {0.5, 0.2, 0.0}, 0.3);
    CHECK(b.theta == 0.3);
    CHECK(std::abs(ymx::minkowski_dot(b.p, b.p) - 1.0) <= 1e-14);
    CHECK(b.X == b.Z);
}

TEST_CASE("sign-flipped amplitudes leave the diagonal residuals unchanged") {
    // X -> -X maps the solution to another solution; each diagonal equation
    // is odd under its own flip, so magnitudes are preserved.
    const auto base = solved_ansatz(1.0, 1.0, 2.0, {0.3, 0.0, 0.0});
    const GaugeCoupling gc{base.g, base.alpha};
    const auto flipped = make_diagonal_ansatz(-base.X, base.Y, -base.Z, base.p, base.theta,
                                              base.mu, base.g, base.alpha);
    for (double t : {0.2, 0.9, 1.7}) {
        const FourVector x{t, 0.4, -0.1, 0.8};
        const auto r0 = ymx::ym_lhs_compact(ymx::jet_from_ansatz(base, x), gc);
        const auto r1 = ymx::ym_lhs_compact(ymx::jet_from_ansatz(flipped, x), gc);
        for (int k = 1; k <= 3; ++k) {
            CHECK(std::abs(std::abs(r0[k - 1][k]) - std::abs(r1[k - 1][k])) <= 1e-14);
        }
    }
}

TEST_CASE("scalar solution: amplitude and residual") {
    // lambda = 2, mu = 1: amplitude mu (2/lambda)^{1/4} = 1 and p^2 = 1.
    const auto s = make_scalar_solution(1.0, 2.0, {0, 0, 0});
    CHECK(s.amplitude() == 1.0);
    CHECK(std::abs(ymx::minkowski_dot(s.p, s.p) - 1.0) <= 1e-14);

    // Residual vanishes identically along the orbit.
    for (double t : {0.0, 0.3, 1.1, 2.9, -4.2}) {
        const FourVector x{t, 0.2, -0.7, 0.4};
        CHECK(std::abs(ymx::scalar_residual(s, x)) <= 1e-12);
    }
    // Exactly zero where sn vanishes.
    CHECK(ymx::scalar_residual(s, FourVector{}) == 0.0);

    // General parameters: p^2 = mu^2 sqrt(lambda/2).
    const auto s2 = make_scalar_solution(1.3, 5.0, {0.4, 0.0, 0.2});
    CHECK(std::abs(ymx::minkowski_dot(s2.p, s2.p) - 1.3 * 1.3 * std::sqrt(2.5)) <= 1e-13);
    CHECK(std::abs(s2.amplitude() - 1.3 * std::pow(2.0 / 5.0, 0.25)) <= 1e-15);
    for (double t : {0.5, 1.9}) {
        CHECK(std::abs(ymx::scalar_residual(s2, FourVector{t, 0.1, 0.2, 0.3})) <= 1e-12);
    }
}

TEST_CASE("scalar residual: perturbed amplitude fails by the cubic excess") {
    // Scaling the amplitude by s turns the residual at the sn peak into
    // lambda A^3 (s^3 - s): the quartic term outruns the d'Alembertian.
    const auto s = make_scalar_solution(1.0, 2.0, {0, 0, 0});
    const double quarter = ymx::complete_elliptic_k(-1.0);
    const FourVector x{quarter / s.p[0], 0, 0, 0};
    const double a = s.amplitude();
    const double got = ymx::scalar_field_residual(1.1 * a, s.lambda, s.p, s.theta, x);
    const double want = s.lambda * a * a * a * (1.1 * 1.1 * 1.1 - 1.1);
    CHECK(std::abs(got - want) <= 1e-12);
    CHECK(std::abs(got - 0.462) <= 1e-12);
    // The unperturbed amplitude still passes through the same entry point.
    CHECK(std::abs(ymx::scalar_field_residual(a, s.lambda, s.p, s.theta, x)) <= 1e-12);
}

TEST_CASE("scalar map: ratios are unity in Landau gauge") {
    const auto map = map_scalar_to_su2(1.0, 1.0, {0.4, -0.2, 0.7}, 1.0);
    CHECK(map.scalar.lambda == 2.0);  // 2 g^2
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(map.f[k] - 1.0) <= 1e-14);
    }
    // Same on-shell momentum for both sides: mu^2 sqrt(lambda/2) = mu^2 g.
    CHECK(map.scalar.p == map.ansatz.p);
}

TEST_CASE("scalar map: homogeneous momentum gives equal ratios for any alpha") {
    for (double alpha : {0.5, 2.0, 7.0}) {
        const auto map = map_scalar_to_su2(1.2, 0.8, {0, 0, 0}, alpha);
        CAPTURE(alpha);
        CHECK(map.f[0] == map.f[1]);
        CHECK(map.f[1] == map.f[2]);
        CHECK(std::abs(map.f[0] - 1.0) <= 1e-14);
    }
}

TEST_CASE("scalar map: reproduces solve_amplitudes in general gauges") {
    const double mu = 1.0, g = 1.0, alpha = 2.0;
    const std::array<double, 3> pv{0.3, 0.1, 0.0};
    const auto map = map_scalar_to_su2(mu, g, pv, alpha);
    const auto amp = solve_amplitudes(mu, g, alpha, on_shell_momentum(mu, g, pv));
    CHECK(std::abs(map.f[0] * map.scalar.amplitude() - amp.X) <= 1e-14);
    CHECK(std::abs(map.f[1] * map.scalar.amplitude() - amp.Y) <= 1e-14);
    CHECK(std::abs(map.f[2] * map.scalar.amplitude() - amp.Z) <= 1e-14);
    CHECK(map.ansatz.X == amp.X);
}

TEST_CASE("scalar map: weak-coupling splitting stays on the closed form") {
    // Large g shrinks the gauge-induced splitting; the identity must hold
    // relative to the system scale, not the tiny difference itself.
    const double mu = 1.0, g = 1000.0, alpha = 2.0;
    const std::array<double, 3> pv{0.4, 0.7, 0.0};
    const auto map = map_scalar_to_su2(mu, g, pv, alpha);
    const auto& a = map.ansatz;
    const auto c = amplitude_rhs(mu, g, alpha, a.p);
    const double cmax = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
    const double coef = (2.0 / (g * g)) * (1.0 - 1.0 / alpha);
    const double lhs = a.X * a.X - a.Y * a.Y;  // = c2 - c1
    const double rhs = coef * (a.p[2] * a.p[2] - a.p[1] * a.p[1]);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(rhs) + cmax));
    CHECK(std::abs(map.f[0] - map.f[1]) > 0.0);  // splitting exists but is small
    CHECK(std::abs(map.f[0] - map.f[1]) < 1e-3);
}
