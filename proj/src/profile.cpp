#include "kramers/profile.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kramers/error.hpp"

namespace kramers {

namespace {

std::vector<double> powers(double q, std::size_t count) {
    std::vector<double> out(count);
    double p = 1.0;
    for (auto& c : out) {
        c = p;
        p *= q;
    }
    return out;
}

void require_densities(std::span<const SpectralDensity> densities) {
    if (densities.empty()) fail(ErrorKind::InvalidArgument, "no spectral densities supplied");
}

}  // namespace

std::vector<double> uniform_nodes(double xmax, double step) {
    if (!(xmax >= 0.0) || !(step > 0.0) || !std::isfinite(xmax)) {
        fail(ErrorKind::InvalidArgument, "profile grid needs xmax >= 0 and step > 0");
    }
    std::vector<double> out;
    const auto count = static_cast<long long>(std::floor(xmax / step + 1e-9));
    for (long long i = 0; i <= count; ++i) out.push_back(static_cast<double>(i) * step);
    return out;
}

double velocity_correction(std::span<const SpectralDensity> densities, double q, double g_v, double x,
                           const QuadratureSpec& quad) {
    require_densities(densities);
    if (!std::isfinite(x) || x < 0.0) fail(ErrorKind::InvalidArgument, "x must be finite and nonnegative");
    const auto weights = powers(q, densities.size());
    const SpectralDensity e = combine(densities, weights);
    const double integral = integrate_fourier_cos([&e](double k) { return e(k); }, x, quad);
    return g_v * (2.0 - q) / std::numbers::pi * integral;
}

SpectralDensity combined_density(std::span<const SpectralDensity> densities, double q, double g_v) {
    require_densities(densities);
    auto weights = powers(q, densities.size());
    for (auto& w : weights) w *= 2.0 * g_v * (2.0 - q);
    return combine(densities, weights);
}

VelocityProfile assemble_profile(std::span<const double> x_nodes, double slip, double g_v, double q, int order,
                                 const std::function<double(double)>& correction) {
    VelocityProfile out;
    out.q = q;
    out.order = order;
    double last = -1.0;
    for (double x : x_nodes) {
        if (!std::isfinite(x) || x < 0.0 || x <= last) {
            fail(ErrorKind::InvalidArgument, "profile nodes must be nonnegative and strictly increasing");
        }
        last = x;
        const double asym = slip + g_v * x;
        const double corr = correction(x);
        out.x_nodes.push_back(x);
        out.asymptote.push_back(asym);
        out.correction.push_back(corr);
        out.total.push_back(asym + corr);
    }
    return out;
}

VelocityProfile full_profile(const ForwardSolution& solution, const ProblemConfig& config,
                             std::span<const double> x_nodes) {
    config.validate();
    const double g_v = config.gradient();
    const double slip = wall_slip(solution, config);
    const auto weights = powers(config.q, solution.densities.size());
    const SpectralDensity e = combine(solution.densities, weights);
    const double prefactor = g_v * (2.0 - config.q) / std::numbers::pi;
    const auto density = [&e](double k) { return e(k); };
    return assemble_profile(x_nodes, slip, g_v, config.q, solution.series.order(), [&](double x) {
        return prefactor * integrate_fourier_cos(density, x, config.quad);
    });
}

VelocityProfile full_profile(const ProblemConfig& config, std::span<const double> x_nodes) {
    config.validate();
    if (config.q == 0.0) {
        fail(ErrorKind::DiffuseLimitSingular, "no finite slip velocity at q = 0 (purely specular wall)");
    }
    return full_profile(solve_forward(config), config, x_nodes);
}

double wall_slip(const ForwardSolution& solution, const ProblemConfig& config) {
    if (config.wall_slip == WallSlip::exact_benchmark) {
        if (config.q != 1.0) fail(ErrorKind::InvalidArgument, "the exact slip benchmark exists only for q = 1");
        return kExactDiffuseSlip * config.gradient();
    }
    return slip_velocity(solution.series, config.q, config.gradient());
}

double wall_velocity(const ForwardSolution& solution, const ProblemConfig& config) {
    config.validate();
    return wall_slip(solution, config) +
           velocity_correction(solution.densities, config.q, config.gradient(), 0.0, config.quad);
}

double wall_velocity(const ProblemConfig& config) {
    config.validate();
    if (config.q == 0.0) {
        fail(ErrorKind::DiffuseLimitSingular, "no finite slip velocity at q = 0 (purely specular wall)");
    }
    return wall_velocity(solve_forward(config), config);
}

std::vector<double> wall_velocity_partial_sums(const ForwardSolution& solution, const ProblemConfig& config) {
    config.validate();
    const double slip = wall_slip(solution, config);
    const double g_v = config.gradient();
    std::vector<double> out;
    double sum = slip;
    double qn = 1.0;
    for (const auto& e : solution.densities) {
        const SpectralDensity single[] = {e};
        sum += qn * velocity_correction(single, config.q, g_v, 0.0, config.quad);
        out.push_back(sum);
        qn *= config.q;
    }
    return out;
}

DistributionSlice boundary_distribution(const SpectralDensity& total, std::span<const double> mu_nodes, Side side) {
    DistributionSlice out;
    out.side = side;
    const auto nodes = total.grid->nodes();
    std::vector<double> integrand(nodes.size());
    for (double mu : mu_nodes) {
        if (!std::isfinite(mu)) fail(ErrorKind::InvalidArgument, "mu must be finite");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            integrand[i] = total.values[i] / (1.0 + nodes[i] * nodes[i] * mu * mu);
        }
        out.mu_nodes.push_back(mu);
        out.values.push_back(total.grid->integrate(integrand) / std::numbers::pi);
    }
    return out;
}

std::complex<double> phi_n(int n, double k, double mu, const ForwardSolution& solution) {
    if (n < 0 || n >= static_cast<int>(solution.densities.size()) || n > solution.series.order()) {
        fail(ErrorKind::UnsupportedOrder, "Phi_" + std::to_string(n) + " needs a series built to that order");
    }
    if (!std::isfinite(k) || !std::isfinite(mu)) fail(ErrorKind::InvalidArgument, "k and mu must be finite");
    const double abs_mu = std::abs(mu);
    double numerator = solution.densities[n](k) - solution.series.coefficients[n] * abs_mu;
    if (n == 0) {
        numerator += mu * mu;
    } else {
        const auto& prev = solution.densities[n - 1];
        const auto nodes = prev.grid->nodes();
        std::vector<double> integrand(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            integrand[i] = prev.values[i] / (1.0 + nodes[i] * nodes[i] * mu * mu);
        }
        numerator -= abs_mu / std::numbers::pi * prev.grid->integrate(integrand);
    }
    return numerator / std::complex<double>(1.0, k * mu);
}

}  // namespace kramers
