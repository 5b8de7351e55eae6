#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ymx/four_vector.hpp"

using ymx::FourVector;
using ymx::metric_diag;
using ymx::minkowski_dot;
using ymx::raise_index;

TEST_CASE("minkowski dot: signature (+,-,-,-)") {
    CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
    CHECK(minkowski_dot({0, 1, 0, 0}, {0, 1, 0, 0}) == -1.0);
    CHECK(minkowski_dot({1, 1, 0, 0}, {1, 1, 0, 0}) == 0.0);  // lightlike
    CHECK(minkowski_dot({2, 1, 1, 1}, {2, 1, 1, 1}) == 1.0);

    CHECK(metric_diag(0) == 1.0);
    CHECK(metric_diag(1) == -1.0);
    CHECK(metric_diag(2) == -1.0);
    CHECK(metric_diag(3) == -1.0);
}

TEST_CASE("raise_index flips spatial components and is an involution") {
    const FourVector p{1, 2, 3, 4};
    const FourVector up = raise_index(p);
    CHECK(up[0] == 1.0);
    CHECK(up[1] == -2.0);
    CHECK(up[2] == -3.0);
    CHECK(up[3] == -4.0);
    CHECK(raise_index(up) == p);
}

TEST_CASE("dot is the Euclidean pairing with one index raised") {
    ymx::testing::Rand rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        FourVector p, q;
        for (int mu = 0; mu < 4; ++mu) {
            p[mu] = rng.uniform(-5.0, 5.0);
            q[mu] = rng.uniform(-5.0, 5.0);
        }
        const FourVector uq = raise_index(q);
        double euclid = 0.0;
        for (int mu = 0; mu < 4; ++mu) euclid += p[mu] * uq[mu];
        CHECK(std::abs(minkowski_dot(p, q) - euclid) <= 1e-14 * (1.0 + std::abs(euclid)));
    }
}

TEST_CASE("dot: symmetry and bilinearity") {
    ymx::testing::Rand rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        FourVector p, q, r;
        for (int mu = 0; mu < 4; ++mu) {
            p[mu] = rng.uniform(-3.0, 3.0);
            q[mu] = rng.uniform(-3.0, 3.0);
            r[mu] = rng.uniform(-3.0, 3.0);
        }
        const double a = rng.uniform(-2.0, 2.0);
        CHECK(minkowski_dot(p, q) == minkowski_dot(q, p));
        const double lhs = minkowski_dot(p, a * q + r);
        const double rhs = a * minkowski_dot(p, q) + minkowski_dot(p, r);
        CHECK(std::abs(lhs - rhs) <= 1e-14 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("FourVector basics") {
    CHECK(FourVector::axis(0) == FourVector{1, 0, 0, 0});
    CHECK(FourVector::axis(3) == FourVector{0, 0, 0, 1});
    const FourVector a{1, 2, 3, 4};
    const FourVector b{0.5, -1, 0, 2};
    CHECK((a + b)[1] == 1.0);
    CHECK((a - b)[3] == 2.0);
    CHECK((2.0 * a)[2] == 6.0);
    CHECK(FourVector{}[0] == 0.0);
}
