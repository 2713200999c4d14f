#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "kramers/kernels.hpp"

namespace kramers {

/// Layout of the k-discretisation: Gauss-Legendre panels between
/// `breakpoints` plus one panel mapped onto [breakpoints.back(), ∞) through
/// k = K/u². Breakpoints start at 0.
struct GridSettings {
    int nodes_per_panel = 16;
    std::vector<double> breakpoints{0.0,  0.01, 0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0,  1.5,  2.0, 3.0,
                                    4.0,  6.0,  8.0,  12.0, 16.0, 24.0, 32.0, 48.0, 64.0, 96.0, 128.0, 192.0, 256.0};
    /// Maximum interpolation defect, relative to max |E|, tolerated by the
    /// grid self-check before GridTooCoarse is raised.
    double interpolation_tol = 1e-8;

    void validate() const;
    /// Twice the nodes per panel.
    GridSettings doubled() const;
};

/// Collocation nodes of the k-grid together with their quadrature weights for
/// ∫₀^∞ dk. Node k = 0 is never part of the grid; the k → 0 value of each
/// density is carried separately.
class SpectralGrid {
public:
    explicit SpectralGrid(GridSettings settings = {});

    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    double k_min() const noexcept { return nodes_.front(); }
    double k_max() const noexcept { return nodes_.back(); }
    /// Start of the mapped tail panel.
    double tail_start() const noexcept { return settings_.breakpoints.back(); }
    const GridSettings& settings() const noexcept { return settings_; }

    /// Panel-wise barycentric interpolation of node values. Past 16 K on the
    /// mapped panel, k²E is interpolated locally (cubic) in ln k, where the
    /// k^-2 ln k tails are nearly linear; beyond k_max the values continue as
    /// |E| ∝ k^tail_exponent.
    double interpolate(std::span<const double> values, double k, double tail_exponent) const;

    /// Points strictly inside each panel, where the interpolant is furthest
    /// from the data; used by the self-check.
    std::vector<double> probe_points() const;

    /// Σ w_i f(k_i).
    double integrate(std::span<const double> values) const;

private:
    GridSettings settings_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> tail_log_nodes_;
};

/// E_n(k) sampled on a grid.
struct SpectralDensity {
    std::shared_ptr<const SpectralGrid> grid;
    std::vector<double> values;
    double value_at_zero = 0.0;
    int order = 0;
    /// Local log-log slope at the last node (≈ -2 for these densities).
    double tail_exponent = -2.0;

    double operator()(double k) const;
    /// ∫₀^∞ E(k) dk with the grid rule.
    double integral() const;
};

/// Builds a density from node values: fits the tail exponent and rejects
/// non-finite samples or tails decaying no faster than 1/k.
SpectralDensity make_density(std::shared_ptr<const SpectralGrid> grid, std::vector<double> values,
                             double value_at_zero, int order);

/// Σ c_n E_n on a common grid.
SpectralDensity combine(std::span<const SpectralDensity> densities, std::span<const double> coefficients);

enum class SeriesKind { forward, inverse };

/// Coefficients of the q-power series: V₀…V_N (forward) or W₀…W_N (inverse).
struct SeriesExpansion {
    SeriesKind kind = SeriesKind::forward;
    std::vector<double> coefficients;

    int order() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    /// Σ_{n ≤ upto} c_n qⁿ; upto < 0 means all terms.
    double partial_sum(double q, int upto = -1) const;
    /// The first upto + 1 coefficients.
    SeriesExpansion truncated(int upto) const;
};

enum class OperatorSign { negative = -1, positive = 1 };

/// One step of the Neumann recursion on the Nyström grid,
///
///   E_n(k) = sign/(π T₂(k)) ∫₀^∞ S(k, k₁) E_{n-1}(k₁) dk₁,
///
/// with S and T₂ supplied by a KernelSet. The kernel matrix on the grid is
/// assembled once and reused for every order.
class NeumannOperator {
public:
    enum class Kernel { forward, inverse };

    NeumannOperator(const KernelSet& kernels, std::shared_ptr<const SpectralGrid> grid, Kernel kernel,
                    OperatorSign sign);

    SpectralDensity apply(const SpectralDensity& previous) const;

    /// Natural (Nyström) interpolation: the operator evaluated at an arbitrary
    /// k using the node values of `previous`. Exact at k = 0.
    double evaluate(const SpectralDensity& previous, double k) const;

    /// Throws GridTooCoarse when the panel interpolant of `result` departs
    /// from the natural interpolation by more than the grid tolerance.
    void self_check(const SpectralDensity& previous, const SpectralDensity& result) const;

    const std::shared_ptr<const SpectralGrid>& grid() const noexcept { return grid_; }
    std::span<const double> t2_nodes() const noexcept { return t2_; }

private:
    double kernel(double k, double k1) const;

    const KernelSet& kernels_;
    std::shared_ptr<const SpectralGrid> grid_;
    Kernel kernel_;
    double sign_;
    std::vector<double> t2_;
    std::vector<double> weighted_kernel_;  // row-major: S(k_i, k_j) w_j
};

/// Throws GridTooCoarse when the interpolant of `density` departs from an
/// exact evaluator at the grid probe points.
void check_interpolation(const SpectralDensity& density, const std::function<double(double)>& exact);

}  // namespace kramers
