#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "ymx/report_io.hpp"

using ymx::format_g17;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("format_g17 round-trips doubles through decimal") {
    const double cases[] = {0.0,         1.0,       0.1,           1.0 / 3.0, 3.141592653589793,
                            -2.5e-17,    1e308,     4.9406564584124654e-324,  // denormal
                            -123456.75, 0.49258571550470802};
    for (double x : cases) {
        const std::string s = format_g17(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(format_g17(1.0) == "1");
    CHECK(format_g17(-0.5) == "-0.5");
}

TEST_CASE("residual report JSON round-trip is lossless") {
    const auto ansatz = ymx::solved_ansatz(1.0, 1.0, 2.0, {0.3, 0.0, 0.0}, 0.25);
    const auto report = ymx::residual_scan(ansatz, ymx::GridSpec::centered_cube(3, 4.0));
    const std::string text = ymx::residual_report_json(report);

    const auto parsed = ymx::residual_report_from_json(text);
    CHECK(parsed.params.X == report.params.X);
    CHECK(parsed.params.Y == report.params.Y);
    CHECK(parsed.params.Z == report.params.Z);
    CHECK(parsed.params.theta == report.params.theta);
    CHECK(parsed.params.mu == report.params.mu);
    CHECK(parsed.params.g == report.params.g);
    CHECK(parsed.params.alpha == report.params.alpha);
    CHECK(parsed.params.p == report.params.p);
    CHECK(parsed.method == report.method);
    CHECK(parsed.fd_step == report.fd_step);
    CHECK(parsed.grid.origin == report.grid.origin);
    CHECK(parsed.grid.extents == report.grid.extents);
    CHECK(parsed.grid.counts == report.grid.counts);
    for (int i = 0; i < 12; ++i) {
        CHECK(parsed.entries[i].a == report.entries[i].a);
        CHECK(parsed.entries[i].nu == report.entries[i].nu);
        CHECK(parsed.entries[i].max_abs == report.entries[i].max_abs);
        CHECK(parsed.entries[i].rms == report.entries[i].rms);
    }
    CHECK(parsed.worst_point == report.worst_point);
    CHECK(parsed.worst_value == report.worst_value);

    // Re-serialization must reproduce the bytes.
    CHECK(ymx::residual_report_json(parsed) == text);
}

TEST_CASE("residual report JSON rejects malformed input") {
    CHECK_THROWS_AS(ymx::residual_report_from_json("not json"), std::runtime_error);
    CHECK_THROWS_AS(ymx::residual_report_from_json("{}"), std::runtime_error);
    CHECK_THROWS_AS(ymx::residual_report_from_json(R"({"params": 3})"), std::runtime_error);
    // Structurally fine but with the wrong number of entries.
    const auto ansatz = ymx::landau_solution(1.0, 1.0, {0, 0, 0});
    const auto report = ymx::residual_scan(ansatz, ymx::GridSpec::centered_cube(2, 1.0));
    std::string text = ymx::residual_report_json(report);
    const auto pos = text.find("\"entries\"");
    REQUIRE(pos != std::string::npos);
    const auto open = text.find('[', pos);
    const auto close = text.find(']', open);
    std::string truncated = text.substr(0, open + 1) + text.substr(close);
    CHECK_THROWS_AS(ymx::residual_report_from_json(truncated), std::runtime_error);
}

TEST_CASE("residual report CSV shape") {
    const auto ansatz = ymx::landau_solution(1.0, 1.0, {0, 0, 0});
    const auto report = ymx::residual_scan(ansatz, ymx::GridSpec::centered_cube(2, 1.0));
    const auto rows = lines_of(ymx::residual_report_csv(report));
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == "a,nu,max_abs,rms");
    CHECK(rows[1].substr(0, 4) == "1,0,");
    CHECK(rows[12].substr(0, 4) == "3,3,");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(std::count(rows[i].begin(), rows[i].end(), ',') == 3);
    }
}

TEST_CASE("amplitudes JSON carries inputs and outputs") {
    const auto ansatz = ymx::solved_ansatz(1.0, 1.0, 2.0, {0.3, 0.0, 0.0});
    const std::string text = ymx::amplitudes_json(ansatz);
    for (const char* key : {"\"mu\"", "\"g\"", "\"alpha\"", "\"p\"", "\"X\"", "\"Y\"", "\"Z\""}) {
        CAPTURE(key);
        CHECK(text.find(key) != std::string::npos);
    }
    CHECK(text.find(format_g17(ansatz.X)) != std::string::npos);
}

TEST_CASE("trajectory CSV headers") {
    const auto q = ymx::evolve_quartic(0.0, 1.0, 1.0, 1e-3, 5);
    const auto qrows = lines_of(ymx::trajectory_csv(q));
    REQUIRE(qrows.size() == 7);
    CHECK(qrows[0] == "t,phi,v,energy");
    CHECK(qrows[1].substr(0, 2) == "0,");

    const auto t = ymx::evolve_triple({0, 0, 0}, {1, 1, 1}, 1.0, 1e-3, 5);
    const auto trows = lines_of(ymx::trajectory_csv(t));
    CHECK(trows[0] == "t,phi1,phi2,phi3,v1,v2,v3,energy");
    CHECK(trows.size() == 7);
}

TEST_CASE("dispersion and elliptic CSV headers") {
    const auto points = ymx::dispersion_scan(1.0, 1.0, {0.0, 0.5}, 200, 3);
    const auto drows = lines_of(ymx::dispersion_csv(points));
    REQUIRE(drows.size() == 3);
    CHECK(drows[0] == "pnorm,p0_expected,p0_measured,abs_error");
    CHECK(drows[1].substr(0, 2) == "0,");

    std::vector<ymx::EllipticTriple> table;
    table.push_back(ymx::jacobi_sn_cn_dn(0.0, -1.0));
    table.push_back(ymx::jacobi_sn_cn_dn(0.5, -1.0));
    const auto erows = lines_of(ymx::elliptic_table_csv(table));
    REQUIRE(erows.size() == 3);
    CHECK(erows[0] == "u,sn,cn,dn");
    CHECK(erows[1] == "0,0,1,1");
}
