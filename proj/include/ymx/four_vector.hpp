#ifndef YMX_FOUR_VECTOR_HPP
#define YMX_FOUR_VECTOR_HPP

#include <array>
#include <cstddef>

namespace ymx {

/// Minkowski four-vector, metric signature (+,-,-,-).  Index 0 is time.
struct FourVector {
    std::array<double, 4> c{};

    FourVector() = default;
    FourVector(double t, double x, double y, double z) : c{t, x, y, z} {}

    double& operator[](std::size_t mu) { return c[mu]; }
    const double& operator[](std::size_t mu) const { return c[mu]; }

    friend FourVector operator+(const FourVector& a, const FourVector& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend FourVector operator-(const FourVector& a, const FourVector& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    friend FourVector operator*(double s, const FourVector& a) {
        return {s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]};
    }
    friend bool operator==(const FourVector& a, const FourVector& b) { return a.c == b.c; }

    /// Unit vector along coordinate axis mu.
    static FourVector axis(std::size_t mu) {
        FourVector e;
        e.c[mu] = 1.0;
        return e;
    }
};

/// p.q = p0 q0 - p1 q1 - p2 q2 - p3 q3.
inline double minkowski_dot(const FourVector& p, const FourVector& q) {
    return p.c[0] * q.c[0] - p.c[1] * q.c[1] - p.c[2] * q.c[2] - p.c[3] * q.c[3];
}

/// Applies the metric: component 0 unchanged, spatial components negated.
/// Involutive, and the same operation lowers an upper index.
inline FourVector raise_index(const FourVector& p) {
    return {p.c[0], -p.c[1], -p.c[2], -p.c[3]};
}

/// Metric diagonal eta^{mu mu} = eta_{mu mu}: +1, -1, -1, -1.
inline constexpr double metric_diag(std::size_t mu) { return mu == 0 ? 1.0 : -1.0; }

}  // namespace ymx

#endif  // YMX_FOUR_VECTOR_HPP
