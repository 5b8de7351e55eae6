#ifndef YMX_REPORT_IO_HPP
#define YMX_REPORT_IO_HPP

#include <string>
#include <vector>

#include "ymx/dynamics.hpp"
#include "ymx/elliptic.hpp"
#include "ymx/solutions.hpp"
#include "ymx/verify.hpp"

namespace ymx {

/// Shortest 17-significant-digit decimal form; round-trips any double.
std::string format_g17(double x);

/// Residual report as JSON with fixed key order, so identical runs give
/// byte-identical files.  Keys: params, method, fd_step, grid, entries,
/// worst_point, worst_value.
std::string residual_report_json(const ResidualReport& report);

/// Inverse of residual_report_json (accepts any field order).
/// Throws std::runtime_error on malformed input.
ResidualReport residual_report_from_json(const std::string& text);

/// CSV with header "a,nu,max_abs,rms" and one row per equation component.
std::string residual_report_csv(const ResidualReport& report);

/// Amplitude solution as JSON: inputs echoed plus X, Y, Z.
std::string amplitudes_json(const DiagonalAnsatz& ansatz);

/// Trajectory CSV: "t,phi,v,energy" for the quartic system,
/// "t,phi1,phi2,phi3,v1,v2,v3,energy" for the triple system.
std::string trajectory_csv(const Trajectory& traj);

/// Dispersion scan CSV with header "pnorm,p0_expected,p0_measured,abs_error".
std::string dispersion_csv(const std::vector<DispersionPoint>& points);

/// Elliptic function table CSV with header "u,sn,cn,dn".
std::string elliptic_table_csv(const std::vector<EllipticTriple>& rows);

}  // namespace ymx

#endif  // YMX_REPORT_IO_HPP
