#include "kramers/neumann_forward.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kramers/error.hpp"

namespace kramers {

namespace {
constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
}

double leading_slip_coefficient() { return 0.5 / kInvSqrtPi; }

ForwardProblem::ForwardProblem(const KernelSet& kernels, std::shared_ptr<const SpectralGrid> grid)
    : kernels_(kernels),
      grid_(std::move(grid)),
      op_(kernels, grid_, NeumannOperator::Kernel::forward, OperatorSign::negative) {
    for (double k : grid_->nodes()) t1_.push_back(kernels_.t_n(1, k));
}

SpectralDensity ForwardProblem::build_e0() const {
    const auto t2 = op_.t2_nodes();
    const auto nodes = grid_->nodes();
    std::vector<double> values(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = kernels_.phi0_fwd(nodes[i]) / t2[i];
    const double at_zero = kernels_.phi0_fwd(0.0) / kernels_.t_n(2, 0.0);
    auto e0 = make_density(grid_, std::move(values), at_zero, 0);
    check_interpolation(e0, [this](double k) { return kernels_.phi0_fwd(k) / kernels_.t_n(2, k); });
    return e0;
}

double ForwardProblem::slip_coefficient(const SpectralDensity& previous) const {
    std::vector<double> integrand(t1_.size());
    for (std::size_t i = 0; i < t1_.size(); ++i) integrand[i] = t1_[i] * previous.values.at(i);
    return -kInvSqrtPi * grid_->integrate(integrand);
}

SpectralDensity ForwardProblem::apply_operator(const SpectralDensity& previous) const {
    auto next = op_.apply(previous);
    op_.self_check(previous, next);
    return next;
}

ForwardSolution ForwardProblem::build_series(int order) const {
    if (order < 0 || order > kMaxOrder) {
        fail(ErrorKind::InvalidArgument, "series order must lie in [0, " + std::to_string(kMaxOrder) + "]");
    }
    ForwardSolution out;
    out.series.coefficients.push_back(leading_slip_coefficient());
    out.densities.push_back(build_e0());
    for (int n = 1; n <= order; ++n) {
        const auto& previous = out.densities.back();
        out.series.coefficients.push_back(slip_coefficient(previous));
        out.densities.push_back(apply_operator(previous));
    }
    return out;
}

double slip_velocity(const SeriesExpansion& series, double q, double g_v) {
    if (series.kind != SeriesKind::forward) fail(ErrorKind::InvalidArgument, "slip velocity needs a forward series");
    if (!(q >= 0.0 && q <= 1.0)) fail(ErrorKind::InvalidArgument, "q must lie in [0, 1]");
    if (q == 0.0) {
        fail(ErrorKind::DiffuseLimitSingular, "slip prefactor (2 - q)/q diverges at q = 0 (purely specular wall)");
    }
    return g_v * (2.0 - q) / q * series.partial_sum(q);
}

ForwardSolution solve_forward(const ProblemConfig& config) {
    config.validate();
    const KernelSuite kernels(config.kernel_quad, true);
    auto grid = std::make_shared<const SpectralGrid>(config.grid);
    return ForwardProblem(kernels, grid).build_series(config.order);
}

}  // namespace kramers
