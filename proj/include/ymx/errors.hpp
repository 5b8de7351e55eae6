#ifndef YMX_ERRORS_HPP
#define YMX_ERRORS_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace ymx {

/// Momentum fails the mass-shell condition p^2 = mu^2 g beyond tolerance.
class DispersionViolation : public std::runtime_error {
public:
    DispersionViolation(double p_squared, double expected)
        : std::runtime_error("dispersion violation: p^2 = " + std::to_string(p_squared) +
                             ", expected mu^2 g = " + std::to_string(expected)),
          p_squared_(p_squared),
          expected_(expected) {}

    double p_squared() const { return p_squared_; }
    double expected() const { return expected_; }

private:
    double p_squared_;
    double expected_;
};

/// The amplitude system has no real solution: at least one squared
/// amplitude came out negative.  Carries all three squares and the names
/// of the offending components.
class NoRealSolution : public std::runtime_error {
public:
    NoRealSolution(std::array<double, 3> squares, std::string which)
        : std::runtime_error("no real amplitude solution: " + which +
                             " (X^2 = " + std::to_string(squares[0]) +
                             ", Y^2 = " + std::to_string(squares[1]) +
                             ", Z^2 = " + std::to_string(squares[2]) + ")"),
          squares_(squares),
          which_(std::move(which)) {}

    /// Squared amplitudes in order X^2, Y^2, Z^2.
    const std::array<double, 3>& squares() const { return squares_; }
    /// Comma-separated list of the negative components, e.g. "Y,Z".
    const std::string& which() const { return which_; }

private:
    std::array<double, 3> squares_;
    std::string which_;
};

/// Fewer than two upward zero crossings: no period can be measured.
class InsufficientCrossings : public std::runtime_error {
public:
    explicit InsufficientCrossings(int found)
        : std::runtime_error("insufficient zero crossings to measure a period: found " +
                             std::to_string(found) + ", need at least 2"),
          found_(found) {}

    int found() const { return found_; }

private:
    int found_;
};

/// Integration state exceeded the blow-up threshold or became non-finite.
class TrajectoryBlowUp : public std::runtime_error {
public:
    TrajectoryBlowUp(long step, double t, double worst)
        : std::runtime_error("trajectory blow-up at step " + std::to_string(step) +
                             " (t = " + std::to_string(t) + "): |state| = " +
                             std::to_string(worst)),
          step_(step),
          time_(t) {}

    long step() const { return step_; }
    double time() const { return time_; }

private:
    long step_;
    double time_;
};

}  // namespace ymx

#endif  // YMX_ERRORS_HPP
