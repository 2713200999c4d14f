#pragma once

#include <memory>
#include <vector>

#include "kramers/problem.hpp"
#include "kramers/spectral.hpp"

namespace kramers {

/// Slip coefficients V₀…V_N and the spectral densities E₀…E_N behind them.
struct ForwardSolution {
    SeriesExpansion series{SeriesKind::forward, {}};
    std::vector<SpectralDensity> densities;
};

/// Forward problem: the far-field gradient is given, the slip is sought as
///
///   V_sl(q) = g_v (2 − q)/q · Σ V_n qⁿ.
///
/// E₀ = φ₀/T₂ already has the k = 0 double pole cancelled. Each further order
/// is E_n = −1/(π T₂) ∫ S E_{n−1} dk₁, where S carries the pole cancellation
/// implied by V_n = −(1/√π) ∫ T₁ E_{n−1} dk.
class ForwardProblem {
public:
    ForwardProblem(const KernelSet& kernels, std::shared_ptr<const SpectralGrid> grid);

    SpectralDensity build_e0() const;
    double slip_coefficient(const SpectralDensity& previous) const;
    SpectralDensity apply_operator(const SpectralDensity& previous) const;
    ForwardSolution build_series(int order) const;

    const NeumannOperator& op() const noexcept { return op_; }
    const std::shared_ptr<const SpectralGrid>& grid() const noexcept { return grid_; }

private:
    const KernelSet& kernels_;
    std::shared_ptr<const SpectralGrid> grid_;
    NeumannOperator op_;
    std::vector<double> t1_;
};

/// V₀ = T₂(0)/T₁(0) = √π/2.
double leading_slip_coefficient();

/// g_v (2 − q)/q · Σ V_n qⁿ. q = 0 raises DiffuseLimitSingular: purely
/// specular walls carry no slip bound.
double slip_velocity(const SeriesExpansion& series, double q, double g_v);

/// Builds the kernels (memoized) and grid from `config` and runs the series
/// to config.order.
ForwardSolution solve_forward(const ProblemConfig& config);

}  // namespace kramers
