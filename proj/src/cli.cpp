#include "kramers/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kramers/error.hpp"
#include "kramers/io.hpp"
#include "kramers/neumann_forward.hpp"
#include "kramers/neumann_inverse.hpp"
#include "kramers/profile.hpp"
#include "kramers/validation.hpp"

namespace kramers {

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

using Row = std::vector<std::string>;

void write_table(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    const auto line = [&](const Row& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            // first column holds labels: left-aligned; numbers right-aligned
            out << (c ? "  " : "") << (c ? std::right : std::left) << std::setw(static_cast<int>(width[c])) << r[c];
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void write_csv(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
    const auto line = [&](const Row& r) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void write_rows(std::ostream& out, OutputFormat format, const Row& header, const std::vector<Row>& rows) {
    if (format == OutputFormat::table) {
        write_table(out, header, rows);
    } else {
        write_csv(out, header, rows);
    }
}

ProblemConfig problem_config(const CliConfig& cli) {
    ProblemConfig config;
    config.q = cli.q;
    config.order = cli.order;
    config.driving = cli.command == Command::inverse ? std::variant<Gradient, SlipVelocity>(SlipVelocity{cli.slip})
                                                     : std::variant<Gradient, SlipVelocity>(Gradient{cli.gradient});
    if (cli.nodes) config.grid.nodes_per_panel = *cli.nodes;
    if (cli.tol) config.quad.rel_tol = *cli.tol;
    if (cli.benchmark_slip) config.wall_slip = WallSlip::exact_benchmark;
    config.validate();
    return config;
}

void coeffs(const ProblemConfig& config, OutputFormat format, std::ostream& out) {
    const ForwardSolution s = solve_forward(config);
    const double g_v = config.gradient();
    const bool has_slip = config.q > 0.0;
    std::vector<double> sums;
    std::vector<double> slips;
    std::vector<Row> rows;
    for (int n = 0; n <= s.series.order(); ++n) {
        sums.push_back(s.series.partial_sum(config.q, n));
        if (has_slip) slips.push_back(slip_velocity(s.series.truncated(n), config.q, g_v));
        rows.push_back({std::to_string(n), format_number(s.series.coefficients[n]), format_number(sums.back()),
                        has_slip ? format_number(slips.back()) : (format == OutputFormat::table ? "-" : "")});
    }
    if (format == OutputFormat::json) {
        auto j = series_to_json(s.series);
        j["q"] = config.q;
        j["gradient"] = g_v;
        j["partial_sums"] = sums;
        j["slip_velocity"] = has_slip ? nlohmann::json(slips) : nlohmann::json(nullptr);
        out << j.dump(2) << '\n';
        return;
    }
    write_rows(out, format, {"n", "V_n", "sum_V_q^n", "V_sl"}, rows);
}

void inverse(const ProblemConfig& config, OutputFormat format, std::ostream& out) {
    const InverseSolution s = solve_inverse(config);
    const double slip = config.slip();
    std::vector<double> sums;
    std::vector<double> gradients;
    std::vector<Row> rows;
    for (int n = 0; n <= s.series.order(); ++n) {
        sums.push_back(s.series.partial_sum(config.q, n));
        gradients.push_back(gradient(s.series.truncated(n), config.q, slip));
        rows.push_back({std::to_string(n), format_number(s.series.coefficients[n]), format_number(sums.back()),
                        format_number(gradients.back())});
    }
    if (format == OutputFormat::json) {
        auto j = series_to_json(s.series);
        j["q"] = config.q;
        j["slip"] = slip;
        j["partial_sums"] = sums;
        j["gradient"] = gradients;
        out << j.dump(2) << '\n';
        return;
    }
    write_rows(out, format, {"n", "W_n", "sum_W_q^n", "g_v"}, rows);
    if (format == OutputFormat::table) out << "g_v = " << format_number(gradients.back()) << '\n';
}

void profile(const ProblemConfig& config, const CliConfig& cli, OutputFormat format, std::ostream& out) {
    const auto x = uniform_nodes(cli.xmax, cli.xstep);
    const VelocityProfile p = full_profile(config, x);
    if (format == OutputFormat::json) {
        out << profile_to_json(p).dump(2) << '\n';
    } else if (format == OutputFormat::csv) {
        write_profile_csv(out, p);
    } else {
        std::vector<Row> rows;
        for (std::size_t i = 0; i < p.x_nodes.size(); ++i) {
            rows.push_back({format_number(p.x_nodes[i]), format_number(p.total[i]), format_number(p.asymptote[i]),
                            format_number(p.correction[i])});
        }
        write_table(out, {"x", "U_total", "U_asymptote", "U_correction"}, rows);
    }
}

void wall(const ProblemConfig& config, OutputFormat format, std::ostream& out) {
    if (config.q == 0.0) {
        fail(ErrorKind::DiffuseLimitSingular, "no finite slip velocity at q = 0 (purely specular wall)");
    }
    const ForwardSolution s = solve_forward(config);
    const auto sums = wall_velocity_partial_sums(s, config);
    const double slip = wall_slip(s, config);
    if (format == OutputFormat::json) {
        out << nlohmann::json{{"q", config.q}, {"gradient", config.gradient()}, {"slip_velocity", slip},
                              {"wall_velocity", sums}}
                   .dump(2)
            << '\n';
        return;
    }
    std::vector<Row> rows;
    for (std::size_t n = 0; n < sums.size(); ++n) rows.push_back({std::to_string(n), format_number(sums[n])});
    write_rows(out, format, {"n", "U(0)"}, rows);
    if (format == OutputFormat::table) out << "V_sl = " << format_number(slip) << '\n';
}

bool validate(OutputFormat format, std::ostream& out) {
    const auto checks = run_reference_checks();
    bool all = true;
    for (const auto& c : checks) all = all && c.passed;
    if (format == OutputFormat::json) {
        out << checks_to_json(checks).dump(2) << '\n';
        return all;
    }
    std::vector<Row> rows;
    for (const auto& c : checks) {
        char tol[32];
        std::snprintf(tol, sizeof tol, "%.1e", c.tolerance);
        rows.push_back({c.name, format_number(c.expected), c.reference, format_number(c.computed), tol,
                        c.passed ? "PASS" : "FAIL"});
    }
    write_rows(out, format, {"check", "expected", "reference", "computed", "tolerance", "result"}, rows);
    if (format == OutputFormat::table) {
        std::size_t failed = 0;
        for (const auto& c : checks) failed += c.passed ? 0 : 1;
        out << (failed ? std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks failed"
                       : "all " + std::to_string(checks.size()) + " checks passed")
            << '\n';
    }
    return all;
}

}  // namespace

int run(const CliConfig& cli, std::ostream& out, std::ostream& err, bool out_is_terminal) {
    try {
        const ProblemConfig config = problem_config(cli);
        std::ofstream file;
        std::ostream* sink = &out;
        if (cli.output_path) {
            file.open(*cli.output_path, std::ios::binary);
            if (!file) fail(ErrorKind::InvalidArgument, "cannot open '" + *cli.output_path + "' for writing");
            sink = &file;
        }
        const OutputFormat format = cli.output_format.value_or(
            out_is_terminal && !cli.output_path ? OutputFormat::table : OutputFormat::csv);
        // build everything in memory so a failure never leaves a partial file
        std::ostringstream buffer;
        bool ok = true;
        switch (cli.command) {
            case Command::coeffs: coeffs(config, format, buffer); break;
            case Command::inverse: inverse(config, format, buffer); break;
            case Command::profile: profile(config, cli, format, buffer); break;
            case Command::wall: wall(config, format, buffer); break;
            case Command::validate: ok = validate(format, buffer); break;
        }
        *sink << buffer.str();
        sink->flush();
        if (!*sink) fail(ErrorKind::InvalidArgument, "writing the output failed");
        return ok ? 0 : kExitNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_terminal) {
    CLI::App app{"Kramers isothermal-slip problem solved by Neumann series in the accommodation coefficient",
                 "kramers"};
    app.require_subcommand(1);
    CliConfig cli;
    std::optional<std::string> format_name;
    bool json = false;
    std::optional<double> gradient_flag;
    std::optional<double> slip_flag;

    const std::map<std::string, Command> commands{{"coeffs", Command::coeffs},
                                                  {"profile", Command::profile},
                                                  {"inverse", Command::inverse},
                                                  {"wall", Command::wall},
                                                  {"validate", Command::validate}};
    const std::map<std::string, std::string> help{
        {"coeffs", "slip-coefficient series V_n and the slip velocity"},
        {"profile", "velocity profile U(x) = V_sl + g_v x + U_c(x)"},
        {"inverse", "gradient series W_n and the gradient for a given slip velocity"},
        {"wall", "partial sums of the wall velocity U(0)"},
        {"validate", "recompute the tabulated reference values"}};
    for (const auto& [name, command] : commands) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        sub->callback([&cli, command = command] { cli.command = command; });
        sub->add_option("--format", format_name, "csv, json or table")
            ->check(CLI::IsMember({"csv", "json", "table"}));
        sub->add_flag("--json", json, "shorthand for --format json");
        sub->add_option("--out", cli.output_path, "write to this file instead of stdout");
        if (command == Command::validate) continue;
        sub->add_option("--q", cli.q, "accommodation coefficient (1 = diffuse wall)")
            ->check(CLI::Range(0.0, 1.0));
        sub->add_option("--order", cli.order, "truncation order N of the q-series")->check(CLI::Range(0, kMaxOrder));
        sub->add_option("--nodes", cli.nodes, "Gauss nodes per k-grid panel")->check(CLI::Range(4, 256));
        sub->add_option("--tol", cli.tol, "relative tolerance of the k-integrals")
            ->check(CLI::Range(1e-15, 1e-2));
        if (command == Command::inverse) {
            sub->add_option("--slip", slip_flag, "given slip velocity V_sl");
        } else {
            sub->add_option("--gradient", gradient_flag, "far-field velocity gradient g_v");
        }
        if (command == Command::profile) {
            sub->add_option("--xmax", cli.xmax, "largest distance from the wall")->check(CLI::NonNegativeNumber);
            sub->add_option("--xstep", cli.xstep, "profile grid step")->check(CLI::PositiveNumber);
        }
        if (command == Command::wall || command == Command::profile) {
            sub->add_flag("--benchmark-slip", cli.benchmark_slip,
                          "use the exact diffuse-wall slip 1.016191 g_v instead of the series (q = 1 only)");
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (format_name && json && *format_name != "json") {
            throw CLI::ValidationError("--json conflicts with --format " + *format_name);
        }
        if (json || format_name == "json") {
            cli.output_format = OutputFormat::json;
        } else if (format_name == "csv") {
            cli.output_format = OutputFormat::csv;
        } else if (format_name == "table") {
            cli.output_format = OutputFormat::table;
        }
        if (gradient_flag) cli.gradient = *gradient_flag;
        if (slip_flag) cli.slip = *slip_flag;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }
    return run(cli, out, err, out_is_terminal);
}

}  // namespace kramers
