// ymx: verification and tabulation front end for the diagonal Jacobi-sn
// SU(2) field configurations and their homogeneous reductions.
//
// Subcommands: verify, amplitudes, evolve, dispersion-scan, elliptic.
// Machine-readable output goes to --out (default stdout); one-line human
// summaries go to stderr.  Exit codes: 0 pass, 1 verification failure,
// 2 usage or solver error.

#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ymx/dynamics.hpp"
#include "ymx/elliptic.hpp"
#include "ymx/report_io.hpp"
#include "ymx/solutions.hpp"
#include "ymx/verify.hpp"

namespace {

using nlohmann::json;

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open '%s' for writing\n", path.c_str());
        return 2;
    }
    f << text;
    f.flush();
    if (!f.good()) {
        std::fprintf(stderr, "error: short write to '%s'\n", path.c_str());
        return 2;
    }
    return 0;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read config file '" + path + "'");
    json j = json::parse(f);  // throws json::exception on malformed input
    if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
    return j;
}

/// Command-line flags win over config-file values: apply the config only
/// where the option was not given on the command line.
template <typename T>
void cfg(const json& js, const char* key, const CLI::Option* opt, T& value) {
    if (opt != nullptr && opt->count() > 0) return;
    if (!js.contains(key)) return;
    value = js.at(key).get<T>();
}

std::string table_json(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows) {
    std::string out = "{\n  \"columns\": [";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + columns[i] + "\"";
    }
    out += "],\n  \"rows\": [\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += "    [";
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i) out += ", ";
            out += ymx::format_g17(rows[r][i]);
        }
        out += r + 1 < rows.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

std::array<double, 3> to_p3(const std::vector<double>& p) { return {p[0], p[1], p[2]}; }

ymx::JetMethod parse_method(const std::string& m) {
    if (m == "analytic") return ymx::JetMethod::analytic;
    if (m == "fd2") return ymx::JetMethod::fd2;
    return ymx::JetMethod::fd4;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
    double mu = 1.0, g = 1.0, alpha = 1.0, theta = 0.0;
    std::vector<double> p{0.0, 0.0, 0.0};
    std::size_t grid = 9;
    double extent = 10.0;
    std::string method = "analytic";
    double tol = 1e-10;
    double fd_step = 1e-2;
    unsigned workers = 0;
    double amplitude = 0.0;  // used only when the --amplitude flag is given
    std::string out, format = "json", config;
};

int run_verify(const VerifyFlags& f, bool amplitude_given) {
    const std::array<double, 3> pv = to_p3(f.p);
    ymx::DiagonalAnsatz ansatz =
        amplitude_given
            ? ymx::make_diagonal_ansatz(f.amplitude, f.amplitude, f.amplitude,
                                        ymx::on_shell_momentum(f.mu, f.g, pv), f.theta, f.mu,
                                        f.g, f.alpha)
            : ymx::solved_ansatz(f.mu, f.g, f.alpha, pv, f.theta);

    const ymx::GridSpec grid = ymx::GridSpec::centered_cube(f.grid, f.extent);
    const ymx::ResidualReport report =
        ymx::residual_scan(ansatz, grid, parse_method(f.method), f.fd_step, f.workers);

    const std::string text = f.format == "csv" ? ymx::residual_report_csv(report)
                                               : ymx::residual_report_json(report);
    if (const int rc = write_output(text, f.out)) return rc;

    // Asserted components: the three diagonal ones always; all 12 when the
    // spatial momentum vanishes (the homogeneous configuration is exact in
    // every component).
    const bool homogeneous = pv[0] == 0.0 && pv[1] == 0.0 && pv[2] == 0.0;
    const double asserted = homogeneous ? report.max_all() : report.max_diagonal();
    const bool pass = asserted <= f.tol;
    std::fprintf(stderr,
                 "residual scan [%s] over %zu points: max|diagonal| = %.3g, max|overall| = %.3g, "
                 "worst at (%.6g, %.6g, %.6g, %.6g)\n",
                 ymx::to_string(report.method), grid.total(), report.max_diagonal(),
                 report.max_all(), report.worst_point.c[0], report.worst_point.c[1],
                 report.worst_point.c[2], report.worst_point.c[3]);
    std::fprintf(stderr, "asserted components (%s) within %g: %s\n",
                 homogeneous ? "all 12" : "diagonal", f.tol, pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

// ------------------------------------------------------------ amplitudes

struct AmplitudeFlags {
    double mu = 1.0, g = 1.0, alpha = 1.0, theta = 0.0;
    std::vector<double> p{0.0, 0.0, 0.0};
    std::string out, format = "json", config;
};

int run_amplitudes(const AmplitudeFlags& f) {
    const ymx::DiagonalAnsatz a = ymx::solved_ansatz(f.mu, f.g, f.alpha, to_p3(f.p), f.theta);
    std::string text;
    if (f.format == "csv") {
        text = "X,Y,Z\n" + ymx::format_g17(a.X) + "," + ymx::format_g17(a.Y) + "," +
               ymx::format_g17(a.Z) + "\n";
    } else {
        text = ymx::amplitudes_json(a);
    }
    if (const int rc = write_output(text, f.out)) return rc;
    std::fprintf(stderr, "amplitudes: X = %.17g, Y = %.17g, Z = %.17g (p0 = %.17g)\n", a.X, a.Y,
                 a.Z, a.p.c[0]);
    return 0;
}

// ---------------------------------------------------------------- evolve

struct EvolveFlags {
    std::string system = "quartic";
    std::vector<double> phi0{0.0};
    std::vector<double> v0{1.0};
    double g = 1.0;
    double dt = 1e-4;
    long steps = 160000;
    long stride = 1;
    std::string out, format = "csv", config;
};

ymx::Trajectory strided(const ymx::Trajectory& traj, long stride) {
    if (stride <= 1) return traj;
    ymx::Trajectory s{traj.kind, traj.dt * static_cast<double>(stride), traj.g, {}, {},
                      traj.energy0};
    for (std::size_t n = 0; n < traj.samples(); n += static_cast<std::size_t>(stride)) {
        s.phi.push_back(traj.phi[n]);
        s.vel.push_back(traj.vel[n]);
    }
    return s;
}

int run_evolve(const EvolveFlags& f) {
    if (f.stride < 1) throw std::invalid_argument("--stride must be >= 1");
    ymx::Trajectory traj{};
    if (f.system == "quartic") {
        if (f.phi0.size() != 1 || f.v0.size() != 1) {
            throw std::invalid_argument("quartic system takes one --phi0 and one --v0 value");
        }
        traj = ymx::evolve_quartic(f.phi0[0], f.v0[0], f.g, f.dt, f.steps);
    } else {
        if (f.phi0.size() != 3 || f.v0.size() != 3) {
            throw std::invalid_argument("triple system takes three --phi0 and three --v0 values");
        }
        traj = ymx::evolve_triple({f.phi0[0], f.phi0[1], f.phi0[2]},
                                  {f.v0[0], f.v0[1], f.v0[2]}, f.g, f.dt, f.steps);
    }

    const ymx::Trajectory out_traj = strided(traj, f.stride);
    std::string text;
    if (f.format == "csv") {
        text = ymx::trajectory_csv(out_traj);
    } else {
        std::vector<std::string> cols;
        std::vector<std::vector<double>> rows;
        const bool quartic = traj.kind == ymx::SystemKind::quartic;
        cols = quartic ? std::vector<std::string>{"t", "phi", "v", "energy"}
                       : std::vector<std::string>{"t",  "phi1", "phi2", "phi3",
                                                  "v1", "v2",   "v3",   "energy"};
        for (std::size_t n = 0; n < out_traj.samples(); ++n) {
            std::vector<double> row{out_traj.time(n)};
            if (quartic) {
                row.push_back(out_traj.phi[n][0]);
                row.push_back(out_traj.vel[n][0]);
            } else {
                for (int i = 0; i < 3; ++i) row.push_back(out_traj.phi[n][i]);
                for (int i = 0; i < 3; ++i) row.push_back(out_traj.vel[n][i]);
            }
            row.push_back(out_traj.energy_at(n));
            rows.push_back(std::move(row));
        }
        text = table_json(cols, rows);
    }
    if (const int rc = write_output(text, f.out)) return rc;

    std::fprintf(stderr, "evolve %s: %ld steps of dt = %g, energy0 = %.17g, drift = %.3g\n",
                 f.system.c_str(), f.steps, f.dt, traj.energy0, traj.energy_drift());
    try {
        const double T = ymx::measure_period(traj);
        std::fprintf(stderr, "measured period (component 0): %.17g\n", T);
    } catch (const ymx::InsufficientCrossings& e) {
        std::fprintf(stderr, "period not measurable: %d upward crossing(s)\n", e.found());
    }
    return 0;
}

// ------------------------------------------------------- dispersion-scan

struct DispersionFlags {
    double mu = 1.0, g = 1.0, theta = 0.0;
    std::vector<double> pnorms{0.0, 0.5, 1.0, 2.0, 3.0};
    int samples_per_period = 2000;
    int periods = 6;
    double tol = 1e-10;
    std::string out, format = "csv", config;
};

int run_dispersion(const DispersionFlags& f, bool tol_given) {
    const auto points =
        ymx::dispersion_scan(f.mu, f.g, f.pnorms, f.samples_per_period, f.periods, f.theta);

    std::string text;
    if (f.format == "csv") {
        text = ymx::dispersion_csv(points);
    } else {
        std::vector<std::vector<double>> rows;
        for (const auto& p : points) {
            rows.push_back({p.pnorm, p.p0_expected, p.p0_measured, p.abs_error});
        }
        text = table_json({"pnorm", "p0_expected", "p0_measured", "abs_error"}, rows);
    }
    if (const int rc = write_output(text, f.out)) return rc;

    double worst = 0.0;
    for (const auto& p : points) worst = std::max(worst, p.abs_error);
    const double intercept = ymx::dispersion_intercept(points);
    std::fprintf(stderr,
                 "dispersion scan: %zu momenta, max |p0 error| = %.3g, intercept of "
                 "p0^2 - |p|^2 = %.17g (mu^2 g = %.17g)\n",
                 points.size(), worst, intercept, f.mu * f.mu * f.g);
    if (tol_given && worst > f.tol) return 1;
    return 0;
}

// -------------------------------------------------------------- elliptic

struct EllipticFlags {
    double m = -1.0;
    double umin = 0.0;
    double umax = 10.0;
    std::size_t samples = 101;
    std::string out, format = "csv", config;
};

int run_elliptic(const EllipticFlags& f) {
    if (f.samples < 2) throw std::invalid_argument("--samples must be at least 2");
    std::vector<ymx::EllipticTriple> rows;
    rows.reserve(f.samples);
    const double du = (f.umax - f.umin) / static_cast<double>(f.samples - 1);
    for (std::size_t i = 0; i < f.samples; ++i) {
        rows.push_back(ymx::jacobi_sn_cn_dn(f.umin + du * static_cast<double>(i), f.m));
    }

    std::string text;
    if (f.format == "csv") {
        text = ymx::elliptic_table_csv(rows);
    } else {
        std::vector<std::vector<double>> table;
        for (const auto& r : rows) table.push_back({r.u, r.sn, r.cn, r.dn});
        text = table_json({"u", "sn", "cn", "dn"}, table);
    }
    if (const int rc = write_output(text, f.out)) return rc;
    std::fprintf(stderr, "elliptic table: %zu rows, m = %g, K(m) = %.17g\n", f.samples, f.m,
                 ymx::complete_elliptic_k(f.m));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SU(2) field configuration verifier and tabulator"};
    app.require_subcommand(1);

    VerifyFlags vf;
    AmplitudeFlags af;
    EvolveFlags ef;
    DispersionFlags df;
    EllipticFlags lf;

    CLI::App* verify = app.add_subcommand(
        "verify", "Scan the 12 equation-of-motion residual components over a spacetime grid");
    auto* v_mu = verify->add_option("--mu", vf.mu, "Integration constant mu (> 0)");
    auto* v_g = verify->add_option("--g", vf.g, "Coupling g (> 0)");
    auto* v_alpha = verify->add_option("--alpha", vf.alpha, "Gauge-fixing parameter (nonzero)");
    auto* v_theta = verify->add_option("--theta", vf.theta, "Phase offset of the argument");
    auto* v_p = verify->add_option("--p", vf.p, "Spatial momentum px,py,pz (p0 set on shell)")
                    ->delimiter(',')
                    ->expected(3);
    auto* v_grid = verify->add_option("--grid", vf.grid, "Samples per axis (n^4 grid)");
    auto* v_extent = verify->add_option("--extent", vf.extent, "Grid side length, centered at 0");
    auto* v_method = verify->add_option("--method", vf.method, "Jet evaluation method")
                         ->check(CLI::IsMember({"analytic", "fd2", "fd4"}));
    auto* v_tol = verify->add_option("--tol", vf.tol, "Pass threshold for asserted components");
    auto* v_fd = verify->add_option("--fd-step", vf.fd_step, "Finite-difference step (fd2/fd4)");
    auto* v_workers = verify->add_option("--workers", vf.workers, "Scan threads (0 = auto)");
    auto* v_amp = verify->add_option(
        "--amplitude", vf.amplitude,
        "Override all three amplitudes with this value instead of solving for them");
    auto* v_out = verify->add_option("--out", vf.out, "Output path (default stdout)");
    auto* v_format =
        verify->add_option("--format", vf.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--config", vf.config, "JSON config file (flags override)");

    CLI::App* amps = app.add_subcommand("amplitudes",
                                        "Solve the amplitude system for X, Y, Z at given gauge");
    auto* a_mu = amps->add_option("--mu", af.mu, "Integration constant mu (> 0)");
    auto* a_g = amps->add_option("--g", af.g, "Coupling g (> 0)");
    auto* a_alpha = amps->add_option("--alpha", af.alpha, "Gauge-fixing parameter (nonzero)");
    auto* a_theta = amps->add_option("--theta", af.theta, "Phase offset of the argument");
    auto* a_p = amps->add_option("--p", af.p, "Spatial momentum px,py,pz (p0 set on shell)")
                    ->delimiter(',')
                    ->expected(3);
    auto* a_out = amps->add_option("--out", af.out, "Output path (default stdout)");
    auto* a_format =
        amps->add_option("--format", af.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    amps->add_option("--config", af.config, "JSON config file (flags override)");

    CLI::App* evolve = app.add_subcommand(
        "evolve", "Integrate the homogeneous reduction and report period and energy drift");
    auto* e_system = evolve->add_option("--system", ef.system, "Which reduction to integrate")
                         ->check(CLI::IsMember({"quartic", "triple"}));
    auto* e_phi0 = evolve->add_option("--phi0", ef.phi0, "Initial field (1 or 3 values)")
                       ->delimiter(',');
    auto* e_v0 =
        evolve->add_option("--v0", ef.v0, "Initial velocity (1 or 3 values)")->delimiter(',');
    auto* e_g = evolve->add_option("--g", ef.g, "Coupling g");
    auto* e_dt = evolve->add_option("--dt", ef.dt, "Time step");
    auto* e_steps = evolve->add_option("--steps", ef.steps, "Number of steps");
    auto* e_stride = evolve->add_option("--stride", ef.stride, "Output every n-th sample");
    auto* e_out = evolve->add_option("--out", ef.out, "Output path (default stdout)");
    auto* e_format =
        evolve->add_option("--format", ef.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    evolve->add_option("--config", ef.config, "JSON config file (flags override)");

    CLI::App* disp = app.add_subcommand(
        "dispersion-scan",
        "Measure the oscillation frequency per spatial momentum against the on-shell value");
    auto* d_mu = disp->add_option("--mu", df.mu, "Integration constant mu (> 0)");
    auto* d_g = disp->add_option("--g", df.g, "Coupling g (> 0)");
    auto* d_theta = disp->add_option("--theta", df.theta, "Phase offset of the argument");
    auto* d_pnorms =
        disp->add_option("--pnorms", df.pnorms, "Spatial momentum magnitudes")->delimiter(',');
    auto* d_spp = disp->add_option("--samples-per-period", df.samples_per_period,
                                   "Time samples per expected period");
    auto* d_periods = disp->add_option("--periods", df.periods, "Periods to sample");
    auto* d_tol =
        disp->add_option("--tol", df.tol, "Fail (exit 1) when max |p0 error| exceeds this");
    auto* d_out = disp->add_option("--out", df.out, "Output path (default stdout)");
    auto* d_format =
        disp->add_option("--format", df.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    disp->add_option("--config", df.config, "JSON config file (flags override)");

    CLI::App* ell = app.add_subcommand("elliptic", "Tabulate sn, cn, dn over an argument range");
    auto* l_m = ell->add_option("--m", lf.m, "Elliptic parameter m < 1");
    auto* l_umin = ell->add_option("--umin", lf.umin, "Range start");
    auto* l_umax = ell->add_option("--umax", lf.umax, "Range end");
    auto* l_samples = ell->add_option("--samples", lf.samples, "Number of rows (>= 2)");
    auto* l_out = ell->add_option("--out", lf.out, "Output path (default stdout)");
    auto* l_format =
        ell->add_option("--format", lf.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    ell->add_option("--config", lf.config, "JSON config file (flags override)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help/version exit clean; usage errors exit 2
    }

    try {
        if (verify->parsed()) {
            const json js = load_config(vf.config);
            cfg(js, "mu", v_mu, vf.mu);
            cfg(js, "g", v_g, vf.g);
            cfg(js, "alpha", v_alpha, vf.alpha);
            cfg(js, "theta", v_theta, vf.theta);
            cfg(js, "p", v_p, vf.p);
            cfg(js, "grid", v_grid, vf.grid);
            cfg(js, "extent", v_extent, vf.extent);
            cfg(js, "method", v_method, vf.method);
            cfg(js, "tol", v_tol, vf.tol);
            cfg(js, "fd_step", v_fd, vf.fd_step);
            cfg(js, "workers", v_workers, vf.workers);
            cfg(js, "amplitude", v_amp, vf.amplitude);
            cfg(js, "out", v_out, vf.out);
            cfg(js, "format", v_format, vf.format);
            if (vf.p.size() != 3) throw std::invalid_argument("--p needs exactly three values");
            const bool amplitude_given = v_amp->count() > 0 || js.contains("amplitude");
            return run_verify(vf, amplitude_given);
        }
        if (amps->parsed()) {
            const json js = load_config(af.config);
            cfg(js, "mu", a_mu, af.mu);
            cfg(js, "g", a_g, af.g);
            cfg(js, "alpha", a_alpha, af.alpha);
            cfg(js, "theta", a_theta, af.theta);
            cfg(js, "p", a_p, af.p);
            cfg(js, "out", a_out, af.out);
            cfg(js, "format", a_format, af.format);
            if (af.p.size() != 3) throw std::invalid_argument("--p needs exactly three values");
            return run_amplitudes(af);
        }
        if (evolve->parsed()) {
            const json js = load_config(ef.config);
            cfg(js, "system", e_system, ef.system);
            cfg(js, "phi0", e_phi0, ef.phi0);
            cfg(js, "v0", e_v0, ef.v0);
            cfg(js, "g", e_g, ef.g);
            cfg(js, "dt", e_dt, ef.dt);
            cfg(js, "steps", e_steps, ef.steps);
            cfg(js, "stride", e_stride, ef.stride);
            cfg(js, "out", e_out, ef.out);
            cfg(js, "format", e_format, ef.format);
            if (ef.system == "triple" && ef.phi0.size() == 1 && e_phi0->count() == 0 &&
                !js.contains("phi0")) {
                ef.phi0 = {0.0, 0.0, 0.0};  // default initial data per system
            }
            if (ef.system == "triple" && ef.v0.size() == 1 && e_v0->count() == 0 &&
                !js.contains("v0")) {
                ef.v0 = {1.0, 1.0, 1.0};
            }
            return run_evolve(ef);
        }
        if (disp->parsed()) {
            const json js = load_config(df.config);
            cfg(js, "mu", d_mu, df.mu);
            cfg(js, "g", d_g, df.g);
            cfg(js, "theta", d_theta, df.theta);
            cfg(js, "pnorms", d_pnorms, df.pnorms);
            cfg(js, "samples_per_period", d_spp, df.samples_per_period);
            cfg(js, "periods", d_periods, df.periods);
            cfg(js, "tol", d_tol, df.tol);
            cfg(js, "out", d_out, df.out);
            cfg(js, "format", d_format, df.format);
            const bool tol_given = d_tol->count() > 0 || js.contains("tol");
            return run_dispersion(df, tol_given);
        }
        if (ell->parsed()) {
            const json js = load_config(lf.config);
            cfg(js, "m", l_m, lf.m);
            cfg(js, "umin", l_umin, lf.umin);
            cfg(js, "umax", l_umax, lf.umax);
            cfg(js, "samples", l_samples, lf.samples);
            cfg(js, "out", l_out, lf.out);
            cfg(js, "format", l_format, lf.format);
            return run_elliptic(lf);
        }
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
