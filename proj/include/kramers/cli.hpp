#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kramers {

enum class Command { coeffs, profile, inverse, wall, validate };
enum class OutputFormat { csv, json, table };

struct CliConfig {
    Command command = Command::coeffs;
    double q = 1.0;
    double gradient = 1.0;
    double slip = 1.0;
    int order = 3;
    std::optional<OutputFormat> output_format;  // unset: table on a terminal, csv otherwise
    std::optional<std::string> output_path;
    double xmax = 30.0;
    double xstep = 0.1;
    bool benchmark_slip = false;
    std::optional<int> nodes;  // Gauss nodes per k-grid panel
    std::optional<double> tol;  // relative tolerance of the k-integrals
};

/// Exit status: 0 on success, 1 on numerical failure or a failed
/// reference check, 2 on invalid arguments.
int run(const CliConfig& config, std::ostream& out, std::ostream& err, bool out_is_terminal);

/// Parses `args` (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool out_is_terminal);

}  // namespace kramers
