#include "ymx/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ymx {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string vec4_json(const FourVector& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < 4; ++k) {
        if (k) s += ",";
        s += format_g17(v.c[k]);
    }
    return s + "]";
}

std::string arr4_json(const std::array<double, 4>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < 4; ++k) {
        if (k) s += ",";
        s += format_g17(v[k]);
    }
    return s + "]";
}

std::string counts_json(const std::array<std::size_t, 4>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < 4; ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s + "]";
}

}  // namespace

std::string residual_report_json(const ResidualReport& report) {
    std::ostringstream out;
    const DiagonalAnsatz& a = report.params;
    out << "{\n";
    out << "  \"params\": {"
        << "\"mu\": " << format_g17(a.mu) << ", \"g\": " << format_g17(a.g)
        << ", \"alpha\": " << format_g17(a.alpha) << ", \"theta\": " << format_g17(a.theta)
        << ", \"X\": " << format_g17(a.X) << ", \"Y\": " << format_g17(a.Y)
        << ", \"Z\": " << format_g17(a.Z) << ", \"p\": " << vec4_json(a.p) << "},\n";
    out << "  \"method\": \"" << to_string(report.method) << "\",\n";
    out << "  \"fd_step\": " << format_g17(report.fd_step) << ",\n";
    out << "  \"grid\": {\"origin\": " << vec4_json(report.grid.origin)
        << ", \"extents\": " << arr4_json(report.grid.extents)
        << ", \"counts\": " << counts_json(report.grid.counts) << "},\n";
    out << "  \"entries\": [\n";
    for (std::size_t e = 0; e < report.entries.size(); ++e) {
        const ResidualEntry& r = report.entries[e];
        out << "    {\"a\": " << r.a << ", \"nu\": " << r.nu
            << ", \"max_abs\": " << format_g17(r.max_abs) << ", \"rms\": " << format_g17(r.rms)
            << "}" << (e + 1 < report.entries.size() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"worst_point\": " << vec4_json(report.worst_point) << ",\n";
    out << "  \"worst_value\": " << format_g17(report.worst_value) << "\n";
    out << "}\n";
    return out.str();
}

ResidualReport residual_report_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("bad report JSON: ") + e.what());
    }
    try {
        const auto& jp = j.at("params");
        DiagonalAnsatz params{};
        params.mu = jp.at("mu").get<double>();
        params.g = jp.at("g").get<double>();
        params.alpha = jp.at("alpha").get<double>();
        params.theta = jp.at("theta").get<double>();
        params.X = jp.at("X").get<double>();
        params.Y = jp.at("Y").get<double>();
        params.Z = jp.at("Z").get<double>();
        for (std::size_t k = 0; k < 4; ++k) params.p.c[k] = jp.at("p").at(k).get<double>();

        ResidualReport report{};
        report.params = params;
        const std::string method = j.at("method").get<std::string>();
        if (method == "analytic") report.method = JetMethod::analytic;
        else if (method == "fd2") report.method = JetMethod::fd2;
        else if (method == "fd4") report.method = JetMethod::fd4;
        else throw std::runtime_error("unknown method: " + method);
        report.fd_step = j.at("fd_step").get<double>();

        const auto& jg = j.at("grid");
        for (std::size_t k = 0; k < 4; ++k) {
            report.grid.origin.c[k] = jg.at("origin").at(k).get<double>();
            report.grid.extents[k] = jg.at("extents").at(k).get<double>();
            report.grid.counts[k] = jg.at("counts").at(k).get<std::size_t>();
        }

        const auto& je = j.at("entries");
        if (je.size() != report.entries.size()) {
            throw std::runtime_error("report must carry exactly 12 entries");
        }
        for (std::size_t e = 0; e < report.entries.size(); ++e) {
            report.entries[e] = {je.at(e).at("a").get<int>(), je.at(e).at("nu").get<int>(),
                                 je.at(e).at("max_abs").get<double>(),
                                 je.at(e).at("rms").get<double>()};
        }
        for (std::size_t k = 0; k < 4; ++k) {
            report.worst_point.c[k] = j.at("worst_point").at(k).get<double>();
        }
        report.worst_value = j.at("worst_value").get<double>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("bad report JSON: ") + e.what());
    }
}

std::string residual_report_csv(const ResidualReport& report) {
    std::string out = "a,nu,max_abs,rms\n";
    for (const ResidualEntry& r : report.entries) {
        out += std::to_string(r.a) + "," + std::to_string(r.nu) + "," + format_g17(r.max_abs) +
               "," + format_g17(r.rms) + "\n";
    }
    return out;
}

std::string amplitudes_json(const DiagonalAnsatz& a) {
    std::ostringstream out;
    out << "{\"mu\": " << format_g17(a.mu) << ", \"g\": " << format_g17(a.g)
        << ", \"alpha\": " << format_g17(a.alpha) << ", \"p\": " << vec4_json(a.p)
        << ", \"X\": " << format_g17(a.X) << ", \"Y\": " << format_g17(a.Y)
        << ", \"Z\": " << format_g17(a.Z) << "}\n";
    return out.str();
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out;
    if (traj.kind == SystemKind::quartic) {
        out = "t,phi,v,energy\n";
        for (std::size_t n = 0; n < traj.samples(); ++n) {
            out += format_g17(traj.time(n)) + "," + format_g17(traj.phi[n][0]) + "," +
                   format_g17(traj.vel[n][0]) + "," + format_g17(traj.energy_at(n)) + "\n";
        }
    } else {
        out = "t,phi1,phi2,phi3,v1,v2,v3,energy\n";
        for (std::size_t n = 0; n < traj.samples(); ++n) {
            out += format_g17(traj.time(n));
            for (int i = 0; i < 3; ++i) out += "," + format_g17(traj.phi[n][i]);
            for (int i = 0; i < 3; ++i) out += "," + format_g17(traj.vel[n][i]);
            out += "," + format_g17(traj.energy_at(n)) + "\n";
        }
    }
    return out;
}

std::string dispersion_csv(const std::vector<DispersionPoint>& points) {
    std::string out = "pnorm,p0_expected,p0_measured,abs_error\n";
    for (const DispersionPoint& p : points) {
        out += format_g17(p.pnorm) + "," + format_g17(p.p0_expected) + "," +
               format_g17(p.p0_measured) + "," + format_g17(p.abs_error) + "\n";
    }
    return out;
}

std::string elliptic_table_csv(const std::vector<EllipticTriple>& rows) {
    std::string out = "u,sn,cn,dn\n";
    for (const EllipticTriple& r : rows) {
        out += format_g17(r.u) + "," + format_g17(r.sn) + "," + format_g17(r.cn) + "," +
               format_g17(r.dn) + "\n";
    }
    return out;
}

}  // namespace ymx
