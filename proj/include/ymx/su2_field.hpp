#ifndef YMX_SU2_FIELD_HPP
#define YMX_SU2_FIELD_HPP

#include <array>
#include <cstddef>
#include <functional>

#include "ymx/four_vector.hpp"
#include "ymx/solutions.hpp"

namespace ymx {

/// Coupling constant and gauge-fixing parameter entering the equations
/// of motion.  alpha must be nonzero (the gauge term carries 1/alpha).
struct GaugeCoupling {
    double g;
    double alpha = 1.0;
};

/// Levi-Civita symbol with 1-based color indices, eps(1,2,3) = +1.
/// Throws std::out_of_range unless all indices are in {1,2,3}.
double levi_civita(int a, int b, int c);

/// Second-order jet of the potential at one event: component values,
/// first and second coordinate derivatives.  All derivative indices are
/// lower (coordinate) indices; metric factors are applied by consumers.
///
/// Storage: value[a-1][mu], d1[nu][a-1][mu] = d_nu A^a_mu,
/// d2[rho][nu][a-1][mu] = d_rho d_nu A^a_mu (symmetric in rho, nu).
struct FieldPointJet {
    std::array<std::array<double, 4>, 3> value{};
    std::array<std::array<std::array<double, 4>, 3>, 4> d1{};
    std::array<std::array<std::array<std::array<double, 4>, 3>, 4>, 4> d2{};

    double A(int a, std::size_t mu) const { return value[a - 1][mu]; }
    double dA(std::size_t nu, int a, std::size_t mu) const { return d1[nu][a - 1][mu]; }
    double ddA(std::size_t rho, std::size_t nu, int a, std::size_t mu) const {
        return d2[rho][nu][a - 1][mu];
    }
};

/// All 12 components of the equations of motion, color a (rows) and
/// lower Lorentz index nu (columns):
///
///   box A^a_nu - (1 - 1/alpha) d_nu (d^mu A^a_mu)
///     + g eps_{abc} A^{b mu} (d_mu A^c_nu - d_nu A^c_mu)
///     + g eps_{abc} d^mu (A^b_mu A^c_nu)
///     + g^2 eps_{abc} eps_{cde} A^{b mu} A^d_mu A^e_nu = 0.
///
/// Returns the left-hand sides; a solution makes every entry vanish.
/// The color sums run through the Levi-Civita symbol literally.
std::array<std::array<double, 4>, 3> ym_lhs_compact(const FieldPointJet& jet,
                                                    const GaugeCoupling& gc);

/// Single component (a, nu) of ym_lhs_compact.
double ym_lhs_compact(const FieldPointJet& jet, const GaugeCoupling& gc, int a, std::size_t nu);

/// Same equations with the cross products unrolled per color (cyclic
/// b, c successors of a, explicit signs, no eps symbols).  Exists to
/// cross-validate ym_lhs_compact; the two agree to rounding for
/// arbitrary jets.
std::array<std::array<double, 4>, 3> ym_lhs_expanded(const FieldPointJet& jet,
                                                     const GaugeCoupling& gc);

/// Single component (a, nu) of ym_lhs_expanded.
double ym_lhs_expanded(const FieldPointJet& jet, const GaugeCoupling& gc, int a, std::size_t nu);

/// Exact jet of the diagonal ansatz at event x, via the closed-form
/// derivatives of sn(u, -1).
FieldPointJet jet_from_ansatz(const DiagonalAnsatz& ansatz, const FourVector& x);

/// A^a_mu as a function of the event, for finite-difference probing.
using FieldMap = std::function<std::array<std::array<double, 4>, 3>(const FourVector&)>;

enum class StencilOrder {
    second,  ///< 3-point central differences
    fourth,  ///< 5-point central differences
};

/// Jet of an arbitrary field map by central differences with step h.
/// Mixed second derivatives use nested first differences; each unordered
/// index pair is computed once and mirrored.  Throws std::runtime_error
/// if any sampled value is non-finite.
FieldPointJet jet_from_callable(const FieldMap& field, const FourVector& x, double h,
                                StencilOrder order);

/// The diagonal ansatz as a FieldMap (for finite-difference cross-checks).
FieldMap ansatz_field_map(const DiagonalAnsatz& ansatz);

}  // namespace ymx

#endif  // YMX_SU2_FIELD_HPP
