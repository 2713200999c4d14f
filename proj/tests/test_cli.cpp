#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kramers/cli.hpp"

using namespace kramers;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args, bool terminal = false) {
    std::ostringstream out;
    std::ostringstream err;
    const int status = run_cli(args, out, err, terminal);
    return {status, out.str(), err.str()};
}

// Rows of a whitespace-separated table, header skipped.
std::vector<std::vector<double>> table_rows(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::vector<double> row;
        double v;
        while (cells >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("coefficient table") {
    const auto r = cli({"coeffs", "--order", "3", "--format", "table"});
    REQUIRE(r.status == 0);
    const auto rows = table_rows(r.out);
    REQUIRE(rows.size() == 4);
    const double expect[] = {0.886227, 0.140523, -0.011556, 0.001092};
    for (int n = 0; n < 4; ++n) CHECK(std::abs(rows[n][1] - expect[n]) < 2e-4);
    CHECK(std::abs(rows[3][3] - 1.016287) < 3e-4);
}

TEST_CASE("inverse problem") {
    const auto r = cli({"inverse", "--order", "3", "--q", "1", "--slip", "1", "--format", "json"});
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("kind") == "inverse");
    CHECK(j.at("order") == 3);
    CHECK(std::abs(j.at("gradient").back().get<double>() - 0.981987) < 5e-4);
    const auto t = cli({"inverse", "--slip", "2", "--format", "table"});
    CHECK(t.out.find("g_v = 1.96") != std::string::npos);
}

TEST_CASE("specular limit fails with a numerical exit status") {
    const auto r = cli({"profile", "--q", "0", "--order", "3"});
    CHECK(r.status == 1);
    CHECK(r.err.find("DiffuseLimitSingular") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("invalid arguments exit with status 2") {
    CHECK(cli({}).status == 2);
    CHECK(cli({"frobnicate"}).status == 2);
    CHECK(cli({"coeffs", "--q", "1.5"}).status == 2);
    CHECK(cli({"coeffs", "--order", "13"}).status == 2);
    CHECK(cli({"coeffs", "--format", "xml"}).status == 2);
    CHECK(cli({"coeffs", "--slip", "1"}).status == 2);
    CHECK(cli({"inverse", "--gradient", "1"}).status == 2);
    CHECK(cli({"coeffs", "--json", "--format", "csv"}).status == 2);
    CHECK(cli({"wall", "--benchmark-slip", "--q", "0.5"}).status == 2);
    CHECK(cli({"profile", "--xstep", "0"}).status == 2);
    CHECK(cli({"coeffs", "--help"}).status == 0);
}

TEST_CASE("output format follows the terminal") {
    const auto piped = cli({"wall", "--order", "1"}, false);
    const auto shown = cli({"wall", "--order", "1"}, true);
    REQUIRE(piped.status == 0);
    REQUIRE(shown.status == 0);
    CHECK(piped.out.rfind("n,U(0)\n", 0) == 0);
    CHECK(shown.out.find(',') == std::string::npos);
    CHECK(shown.out.find("V_sl = ") != std::string::npos);
}

TEST_CASE("profile output is deterministic") {
    const std::vector<std::string> args{"profile", "--q", "0.5", "--order", "2", "--xmax", "3", "--xstep", "0.5"};
    const auto a = cli(args);
    const auto b = cli(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("x,U_total,U_asymptote,U_correction\n", 0) == 0);
    CHECK(a.out.find('\r') == std::string::npos);
    std::size_t lines = 0;
    for (char c : a.out) lines += c == '\n';
    CHECK(lines == 8);

    auto json_args = args;
    json_args.push_back("--json");
    const auto j = nlohmann::json::parse(cli(json_args).out);
    CHECK(j.at("x_nodes").size() == 7);
    CHECK(j.at("q") == 0.5);
}

TEST_CASE("output file") {
    const std::string path = "cli_test_wall.csv";
    std::remove(path.c_str());
    const auto r = cli({"wall", "--order", "2", "--benchmark-slip", "--out", path}, true);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str().rfind("n,U(0)\n0,0.6747", 0) == 0);
    std::remove(path.c_str());
    CHECK(cli({"wall", "--out", "no/such/dir/file.csv"}).status == 2);
}

TEST_CASE("validate") {
    const auto r = cli({"validate", "--json"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_passed") == true);
    CHECK(j.at("checks").size() >= 30);
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("reference"));
        CHECK(c.contains("computed"));
        CHECK(c.contains("tolerance"));
        CHECK(c.at("pass") == true);
    }
}
