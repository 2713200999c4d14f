#pragma once

#include <functional>
#include <span>
#include <vector>

namespace kramers {

enum class Mapping {
    gauss_weighted_halfline,  // ∫₀^∞ e^{-t²} f(t) dt
    algebraic_halfline,       // ∫₀^∞ g(k) dk, g = O(k^-2)
    fourier_cos,              // ∫₀^∞ g(k) cos(kx) dk
};

struct QuadratureSpec {
    int node_count = 64;  // Gauss-Legendre nodes per panel
    Mapping mapping = Mapping::algebraic_halfline;
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    std::vector<double> split_points{1.0, 4.0, 16.0, 64.0};

    /// Throws InvalidArgument when an invariant is violated.
    void validate() const;

    /// Same settings with twice the nodes per panel.
    QuadratureSpec doubled() const;
};

struct IntegrandSample {
    double abscissa;
    double weight;
    double value;
};

struct QuadratureNode {
    double abscissa;
    double weight;
};

/// Gauss-Legendre rule on [-1, 1], nodes ascending. `barycentric` holds the
/// barycentric interpolation weights for the same nodes.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> barycentric;
};

/// Cached per order; the returned reference stays valid for the program lifetime.
const GaussLegendreRule& gauss_legendre(int n);

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Legendre on [a, b]: each panel is compared against the
/// half-order rule and bisected until the two agree to tolerance.
double integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec);

double integrate_gauss_weighted(const Integrand& f, const QuadratureSpec& spec);

/// ∫₀^∞ g(k) dk over the split panels, extended geometrically until a fitted
/// c·k^-p tail is stable, then closed with ∫ c·k^-p analytically.
double integrate_halfline(const Integrand& g, const QuadratureSpec& spec);

/// ∫₀^∞ g(k) cos(kx) dk. Beyond k = 4 (or the last split point when x < 0.5)
/// panels are aligned to half-periods π/x and the remainder is closed with the
/// asymptotic tail of the fitted power law.
double integrate_fourier_cos(const Integrand& g, double x, const QuadratureSpec& spec);

/// Composite rule for ∫₀^∞ e^{-t²} f(t) dt with e^{-t²} folded into the
/// weights. Panels are dyadic on (0, 1) and refined toward t = 0 until the
/// first panel is narrower than `finest_scale` / 8, so that integrands with
/// structure at t ~ finest_scale are resolved. Cached per (n, level).
std::span<const QuadratureNode> gauss_weighted_rule(int n, double finest_scale);

/// Integrand values on the fixed (non-adaptive) split-point rule; mainly a
/// diagnostic for inspecting where an integral gets its weight.
std::vector<IntegrandSample> tabulate(const Integrand& f, const QuadratureSpec& spec);

}  // namespace kramers
