#ifndef YMX_TESTS_ORACLES_HPP
#define YMX_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests.  Everything
// here is deliberately built on different algorithms than the library under
// test: quadrature instead of AGM, Runge-Kutta instead of Landen descent,
// Gaussian elimination instead of closed-form amplitude formulas.

#include <array>
#include <cstdint>
#include <functional>

#include "ymx/su2_field.hpp"

namespace ymx::testing {

// Complete elliptic integral K(m) = \int_0^{pi/2} dt / sqrt(1 - m sin^2 t),
// evaluated by adaptive Simpson quadrature.  Valid for m < 1.
double oracle_complete_k(double m);

struct OdeTriple {
    double sn = 0.0;
    double cn = 1.0;
    double dn = 1.0;
};

// Integrates the defining first-order system
//   sn' = cn dn,   cn' = -sn dn,   dn' = -m sn cn
// from (0, 1, 1) to argument u with classical fixed-step RK4.
OdeTriple oracle_sncndn(double u, double m);

// 3x3 dense solve by Gaussian elimination with partial pivoting.
// Throws std::runtime_error on a (numerically) singular matrix.
std::array<double, 3> oracle_solve3(const std::array<std::array<double, 3>, 3>& a,
                                    const std::array<double, 3>& b);

// Deterministic uniform generator.  mt19937_64 has a fixed portable stream,
// and the [0,1) mapping below avoids std::uniform_real_distribution, whose
// output is implementation-defined.
class Rand {
  public:
    explicit Rand(std::uint64_t seed) : state_(seed) {}

    double uniform(double lo, double hi) {
        const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

  private:
    std::uint64_t next() {
        // splitmix64; tiny, seedable, and identical everywhere.
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

// A dense random field jet with entries in [-1, 1] and a symmetric second
// derivative block, as any jet of an actual C^2 field would have.
ymx::FieldPointJet random_jet(Rand& rng);

}  // namespace ymx::testing

#endif
