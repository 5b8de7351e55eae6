#ifndef YMX_VERIFY_HPP
#define YMX_VERIFY_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "ymx/four_vector.hpp"
#include "ymx/solutions.hpp"
#include "ymx/su2_field.hpp"

namespace ymx {

/// Uniform rectangular sampling grid in spacetime.  Axis k carries
/// counts[k] samples from origin[k] with spacing extents[k]/(counts[k]-1)
/// (a single sample sits at the origin).  Flat indexing is row-major
/// with axis 0 slowest.
struct GridSpec {
    FourVector origin;
    std::array<double, 4> extents;
    std::array<std::size_t, 4> counts;

    std::size_t total() const { return counts[0] * counts[1] * counts[2] * counts[3]; }
    double spacing(std::size_t axis) const {
        return counts[axis] > 1 ? extents[axis] / static_cast<double>(counts[axis] - 1) : 0.0;
    }
    FourVector point(std::size_t flat) const;

    /// n^4 points on a cube of side L centered at the origin of spacetime.
    static GridSpec centered_cube(std::size_t n, double L);
};

enum class JetMethod {
    analytic,  ///< closed-form jets from the ansatz
    fd2,       ///< order-2 finite differences of the field map
    fd4,       ///< order-4 finite differences of the field map
};

const char* to_string(JetMethod m);

/// Residual norms for one equation component (color a, Lorentz nu).
struct ResidualEntry {
    int a;
    int nu;
    double max_abs;
    double rms;
};

/// Full scan result: the 12 equation components' norms over a grid.
struct ResidualReport {
    DiagonalAnsatz params;
    JetMethod method;
    double fd_step;  ///< 0 when method == analytic
    GridSpec grid;
    std::array<ResidualEntry, 12> entries;  ///< ordered a = 1..3, nu = 0..3
    FourVector worst_point;  ///< first grid point attaining the global max
    double worst_value;      ///< global max over all entries

    const ResidualEntry& entry(int a, int nu) const {
        return entries[static_cast<std::size_t>(a - 1) * 4 + static_cast<std::size_t>(nu)];
    }
    /// Max over the diagonal components (1,1), (2,2), (3,3).
    double max_diagonal() const;
    /// Max over all 12 components (= worst_value).
    double max_all() const;
};

/// Evaluates all 12 equation components at every grid point and
/// aggregates max |.| and rms per component.
///
/// Deterministic by construction: points are processed in fixed blocks
/// of kScanBlock, each block reduced with pairwise summation, blocks
/// merged in index order — so the report is bit-identical for any
/// worker count.  workers = 0 picks a hardware-based default.
ResidualReport residual_scan(const DiagonalAnsatz& ansatz, const GridSpec& grid,
                             JetMethod method = JetMethod::analytic, double fd_step = 1e-2,
                             unsigned workers = 0);

inline constexpr std::size_t kScanBlock = 512;

/// Log-log slope of finite-difference jet error against step size.
struct ConvergenceStudy {
    double slope;                  ///< least-squares slope (when applicable)
    bool applicable;               ///< false when errors sit at rounding level
    std::vector<double> h;         ///< step sizes as supplied
    std::vector<double> max_error; ///< max jet-entry error per step
};

/// Error of jet_from_callable(field) against a reference jet at x, over
/// the supplied (strictly decreasing, >= 3) steps.  Throws
/// std::invalid_argument on a bad step list.
ConvergenceStudy convergence_study(const FieldMap& field, const FieldPointJet& reference,
                                   const FourVector& x, const std::vector<double>& h_list,
                                   StencilOrder order);

/// Convenience overload: the ansatz field probed against its exact jet.
ConvergenceStudy convergence_study(const DiagonalAnsatz& ansatz, const FourVector& x,
                                   const std::vector<double>& h_list, StencilOrder order);

/// Outcome of the equal-amplitude reduction check: whether the three
/// diagonal equation components, each carrying its own gauge-term
/// momentum, agree with one another (pass) and vanish (vanish).
struct CollapseReport {
    bool pass;    ///< the three equations coincide over the samples
    bool vanish;  ///< ... and are zero
    double max_mismatch;                   ///< max pairwise |eq_i - eq_j|
    double max_abs;                        ///< max |eq_k|
    std::array<double, 3> equation_max;    ///< per-equation max |eq_k|
    std::array<double, 3> pair_mismatch;   ///< |eq1-eq2|, |eq1-eq3|, |eq2-eq3|
    double tolerance;                      ///< absolute threshold used
};

/// Builds the equal-amplitude configuration (all three amplitudes at the
/// alpha = 1 value mu/sqrt(g)), evaluates the three diagonal equation
/// components over one period of samples, and reports coincidence and
/// vanishing.  Coincidence is expected iff alpha = 1 or all spatial
/// momentum components have equal magnitude.
CollapseReport collapse_check(double mu, double g, double alpha,
                              const std::array<double, 3>& spatial_p, double rel_tol = 1e-10,
                              std::size_t samples = 17);

}  // namespace ymx

#endif  // YMX_VERIFY_HPP
