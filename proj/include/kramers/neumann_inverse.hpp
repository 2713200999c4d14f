#pragma once

#include <memory>
#include <vector>

#include "kramers/problem.hpp"
#include "kramers/spectral.hpp"

namespace kramers {

/// SeriesExpansion with kind = inverse: W₀…W_N.
using InverseSeries = SeriesExpansion;

struct InverseSolution {
    InverseSeries series{SeriesKind::inverse, {}};
    std::vector<SpectralDensity> densities;
};

/// Inverse problem: the slip velocity is given, the far-field gradient is
/// sought as
///
///   g_v(q) = V_sl q/(2 − q) · Σ W_n qⁿ,
///
/// with W_n = (2/π) ∫ T₁ E_{n−1} dk and E_n = +1/(π T₂) ∫ S E_{n−1} dk₁.
class InverseProblem {
public:
    InverseProblem(const KernelSet& kernels, std::shared_ptr<const SpectralGrid> grid);

    SpectralDensity build_e0() const;
    double w_coefficient(const SpectralDensity& previous) const;
    SpectralDensity apply_operator(const SpectralDensity& previous) const;
    InverseSolution build_series(int order) const;

    const NeumannOperator& op() const noexcept { return op_; }
    const std::shared_ptr<const SpectralGrid>& grid() const noexcept { return grid_; }

private:
    const KernelSet& kernels_;
    std::shared_ptr<const SpectralGrid> grid_;
    NeumannOperator op_;
    std::vector<double> t1_;
};

/// W₀ = T₁(0)/T₂(0) = 2/√π.
double leading_gradient_coefficient();

/// V_sl q/(2 − q) · Σ W_n qⁿ; exactly 0 at q = 0.
double gradient(const InverseSeries& series, double q, double slip);

InverseSolution solve_inverse(const ProblemConfig& config);

}  // namespace kramers
