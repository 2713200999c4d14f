#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "kramers/neumann_forward.hpp"
#include "kramers/problem.hpp"
#include "kramers/spectral.hpp"

namespace kramers {

/// U(x) = V_sl(q) + g_v x + U_c(x) on a grid of distances from the wall
/// (in mean free paths).
struct VelocityProfile {
    std::vector<double> x_nodes;
    std::vector<double> total;
    std::vector<double> asymptote;
    std::vector<double> correction;
    double q = 1.0;
    int order = 0;
};

enum class Side { plus, minus };

/// h_c(±0, μ) at the wall.
struct DistributionSlice {
    std::vector<double> mu_nodes;
    std::vector<double> values;
    Side side = Side::plus;
};

/// 0, step, 2·step, … up to xmax inclusive.
std::vector<double> uniform_nodes(double xmax = 30.0, double step = 0.1);

/// U_c(x) = Σ qⁿ g_v (2 − q)/π ∫₀^∞ cos(kx) E_n(k) dk.
double velocity_correction(std::span<const SpectralDensity> densities, double q, double g_v, double x,
                           const QuadratureSpec& quad = default_profile_spec());

/// Total E(k) = 2 g_v (2 − q) Σ qⁿ E_n(k).
SpectralDensity combined_density(std::span<const SpectralDensity> densities, double q, double g_v);

/// Assembles a profile from the slip, the gradient and any U_c evaluator.
VelocityProfile assemble_profile(std::span<const double> x_nodes, double slip, double g_v, double q, int order,
                                 const std::function<double(double)>& correction);

/// The asymptote uses the slip selected by config.wall_slip.
VelocityProfile full_profile(const ForwardSolution& solution, const ProblemConfig& config,
                             std::span<const double> x_nodes);
VelocityProfile full_profile(const ProblemConfig& config, std::span<const double> x_nodes);

/// Slip velocity that enters U(0) under config.wall_slip.
double wall_slip(const ForwardSolution& solution, const ProblemConfig& config);

/// U(0) = V_sl + Σ_{n ≤ N} qⁿ U_c⁽ⁿ⁾(0).
double wall_velocity(const ForwardSolution& solution, const ProblemConfig& config);
double wall_velocity(const ProblemConfig& config);

/// U(0) truncated after each order 0…N, i.e. the successive approximations.
std::vector<double> wall_velocity_partial_sums(const ForwardSolution& solution, const ProblemConfig& config);

/// h_c(0, μ) = (1/π) ∫₀^∞ E(k)/(1 + k²μ²) dk for the combined density E.
DistributionSlice boundary_distribution(const SpectralDensity& total, std::span<const double> mu_nodes,
                                        Side side = Side::plus);

/// Φ_n(k, μ) from the characteristic relation
///   Φ₀(1 + ikμ) = E₀ + μ² − V₀|μ|,
///   Φ_n(1 + ikμ) = E_n − V_n|μ| − (|μ|/π) ∫ E_{n−1}(k₁)/(1 + k₁²μ²) dk₁.
std::complex<double> phi_n(int n, double k, double mu, const ForwardSolution& solution);

}  // namespace kramers
