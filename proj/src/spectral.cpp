#include "kramers/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kramers/error.hpp"

namespace kramers {

namespace {

constexpr double kNominalTailExponent = -2.0;

// Tail panel map k = K/u². Steeper maps reach wave numbers where the S-kernel
// cancellation k₁²[J₅ − √π T₃T₃] loses all digits.
constexpr int kTailPower = 2;

double tail_k(double K, double u) { return K / (u * u); }

double barycentric(std::span<const double> values, const GaussLegendreRule& rule, double x, bool reversed) {
    const std::size_t n = rule.nodes.size();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = reversed ? values[n - 1 - i] : values[i];
        const double diff = x - rule.nodes[i];
        if (diff == 0.0) return v;
        const double c = rule.barycentric[i] / diff;
        num += c * v;
        den += c;
    }
    return num / den;
}

double fit_tail_exponent(double k0, double v0, double k1, double v1) {
    if (v0 == 0.0 || v1 == 0.0 || (v0 > 0.0) != (v1 > 0.0)) return kNominalTailExponent;
    return std::log(v1 / v0) / std::log(k1 / k0);
}

void require_same_grid(const SpectralDensity& a, const std::shared_ptr<const SpectralGrid>& grid) {
    if (!a.grid || a.grid->size() != grid->size() ||
        !std::equal(a.grid->nodes().begin(), a.grid->nodes().end(), grid->nodes().begin())) {
        fail(ErrorKind::InvalidArgument, "densities live on different grids");
    }
}

}  // namespace

void GridSettings::validate() const {
    if (nodes_per_panel < 4) fail(ErrorKind::InvalidArgument, "nodes_per_panel must be >= 4");
    if (breakpoints.size() < 2 || breakpoints.front() != 0.0) {
        fail(ErrorKind::InvalidArgument, "grid breakpoints must start at 0 and contain at least one panel");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i])) {
            fail(ErrorKind::InvalidArgument, "grid breakpoints must be finite and strictly increasing");
        }
    }
    if (!(interpolation_tol > 0.0)) fail(ErrorKind::InvalidArgument, "interpolation_tol must be positive");
}

GridSettings GridSettings::doubled() const {
    GridSettings out = *this;
    out.nodes_per_panel *= 2;
    return out;
}

SpectralGrid::SpectralGrid(GridSettings settings) : settings_(std::move(settings)) {
    settings_.validate();
    const GaussLegendreRule& gl = gauss_legendre(settings_.nodes_per_panel);
    const auto& bp = settings_.breakpoints;
    const int n = settings_.nodes_per_panel;
    for (std::size_t p = 1; p < bp.size(); ++p) {
        const double half = 0.5 * (bp[p] - bp[p - 1]);
        const double mid = 0.5 * (bp[p] + bp[p - 1]);
        for (int i = 0; i < n; ++i) {
            nodes_.push_back(mid + half * gl.nodes[i]);
            weights_.push_back(half * gl.weights[i]);
        }
    }
    // u ∈ (0, 1): ascending k is descending u
    const double K = bp.back();
    for (int i = n - 1; i >= 0; --i) {
        const double u = 0.5 * (1.0 + gl.nodes[i]);
        nodes_.push_back(tail_k(K, u));
        weights_.push_back(0.5 * gl.weights[i] * kTailPower * tail_k(K, u) / u);
        tail_log_nodes_.push_back(std::log(nodes_.back()));
    }
}

double SpectralGrid::interpolate(std::span<const double> values, double k, double tail_exponent) const {
    if (values.size() != nodes_.size()) fail(ErrorKind::InvalidArgument, "value count does not match the grid");
    k = std::abs(k);
    const auto& bp = settings_.breakpoints;
    const std::size_t n = static_cast<std::size_t>(settings_.nodes_per_panel);
    const GaussLegendreRule& gl = gauss_legendre(settings_.nodes_per_panel);
    const double K = bp.back();
    if (k <= K) {
        auto it = std::upper_bound(bp.begin(), bp.end(), k);
        std::size_t panel = (it == bp.begin()) ? 0 : static_cast<std::size_t>(it - bp.begin()) - 1;
        panel = std::min(panel, bp.size() - 2);
        const double a = bp[panel];
        const double b = bp[panel + 1];
        const double x = (2.0 * k - a - b) / (b - a);
        return barycentric(values.subspan(panel * n, n), gl, x, false);
    }
    if (k <= 16.0 * K) {
        const double u = std::sqrt(K / k);
        return barycentric(values.subspan(values.size() - n, n), gl, 2.0 * u - 1.0, true);
    }
    if (k <= nodes_.back()) {
        // The last nodes are decades apart and E ~ u⁴ ln u resolves poorly in
        // u; k²E is nearly linear in ln k, so four neighbours suffice.
        const double s = std::log(k);
        const auto& t = tail_log_nodes_;
        const std::size_t first = nodes_.size() - n;
        const std::size_t above = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), s) - t.begin());
        const std::size_t lo = std::min(above < 2 ? 0 : above - 2, n - 4);
        double sum = 0.0;
        for (std::size_t i = lo; i < lo + 4; ++i) {
            double basis = 1.0;
            for (std::size_t j = lo; j < lo + 4; ++j) {
                if (j != i) basis *= (s - t[j]) / (t[i] - t[j]);
            }
            const double kn = nodes_[first + i];
            sum += basis * values[first + i] * kn * kn;
        }
        return sum / (k * k);
    }
    return values.back() * std::pow(k / nodes_.back(), tail_exponent);
}

std::vector<double> SpectralGrid::probe_points() const {
    const auto& bp = settings_.breakpoints;
    std::vector<double> out;
    for (std::size_t p = 1; p < bp.size(); ++p) {
        for (double x : {-0.98, 0.03, 0.98}) out.push_back(0.5 * (bp[p] + bp[p - 1]) + 0.5 * (bp[p] - bp[p - 1]) * x);
    }
    // inside the mapped panel, between its extreme nodes
    const double K = bp.back();
    for (double u : {0.02, 0.5, 0.98}) out.push_back(tail_k(K, u));
    return out;
}

double SpectralGrid::integrate(std::span<const double> values) const {
    if (values.size() != nodes_.size()) fail(ErrorKind::InvalidArgument, "value count does not match the grid");
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) sum += weights_[i] * values[i];
    return sum;
}

double SpectralDensity::operator()(double k) const {
    if (k == 0.0) return value_at_zero;
    return grid->interpolate(values, k, tail_exponent);
}

double SpectralDensity::integral() const { return grid->integrate(values); }

SpectralDensity make_density(std::shared_ptr<const SpectralGrid> grid, std::vector<double> values,
                             double value_at_zero, int order) {
    if (!grid) fail(ErrorKind::InvalidArgument, "density needs a grid");
    if (values.size() != grid->size()) fail(ErrorKind::InvalidArgument, "value count does not match the grid");
    for (double v : values) {
        if (!std::isfinite(v)) fail(ErrorKind::NonFinite, "density sample is not finite");
    }
    if (!std::isfinite(value_at_zero)) fail(ErrorKind::NonFinite, "density value at k = 0 is not finite");
    const auto nodes = grid->nodes();
    const std::size_t m = nodes.size();
    const double p = fit_tail_exponent(nodes[m - 2], values[m - 2], nodes[m - 1], values[m - 1]);
    if (p >= -1.0) {
        fail(ErrorKind::TailDivergence,
             "density of order " + std::to_string(order) + " decays like k^" + std::to_string(p));
    }
    SpectralDensity d;
    d.grid = std::move(grid);
    d.values = std::move(values);
    d.value_at_zero = value_at_zero;
    d.order = order;
    d.tail_exponent = p;
    return d;
}

SpectralDensity combine(std::span<const SpectralDensity> densities, std::span<const double> coefficients) {
    if (densities.empty() || densities.size() != coefficients.size()) {
        fail(ErrorKind::InvalidArgument, "combine needs one coefficient per density");
    }
    const auto& grid = densities.front().grid;
    std::vector<double> values(grid->size(), 0.0);
    double at_zero = 0.0;
    int order = 0;
    for (std::size_t n = 0; n < densities.size(); ++n) {
        require_same_grid(densities[n], grid);
        for (std::size_t i = 0; i < values.size(); ++i) values[i] += coefficients[n] * densities[n].values[i];
        at_zero += coefficients[n] * densities[n].value_at_zero;
        order = std::max(order, densities[n].order);
    }
    return make_density(grid, std::move(values), at_zero, order);
}

double SeriesExpansion::partial_sum(double q, int upto) const {
    const int last = (upto < 0) ? order() : std::min(upto, order());
    double sum = 0.0;
    for (int n = last; n >= 0; --n) sum = sum * q + coefficients[n];
    return sum;
}

SeriesExpansion SeriesExpansion::truncated(int upto) const {
    if (upto < 0 || upto > order()) {
        fail(ErrorKind::UnsupportedOrder, "cannot truncate an order-" + std::to_string(order()) + " series at " +
                                              std::to_string(upto));
    }
    return {kind, {coefficients.begin(), coefficients.begin() + upto + 1}};
}

NeumannOperator::NeumannOperator(const KernelSet& kernels, std::shared_ptr<const SpectralGrid> grid, Kernel kernel,
                                 OperatorSign sign)
    : kernels_(kernels), grid_(std::move(grid)), kernel_(kernel), sign_(static_cast<double>(sign)) {
    if (!grid_) fail(ErrorKind::InvalidArgument, "operator needs a grid");
    const auto nodes = grid_->nodes();
    const auto weights = grid_->weights();
    const std::size_t m = nodes.size();
    t2_.resize(m);
    for (std::size_t i = 0; i < m; ++i) t2_[i] = kernels_.t_n(2, nodes[i]);
    weighted_kernel_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) weighted_kernel_[i * m + j] = this->kernel(nodes[i], nodes[j]) * weights[j];
    }
}

double NeumannOperator::kernel(double k, double k1) const {
    return kernel_ == Kernel::forward ? kernels_.s_fwd(k, k1) : kernels_.s_inv(k, k1);
}

SpectralDensity NeumannOperator::apply(const SpectralDensity& previous) const {
    require_same_grid(previous, grid_);
    const std::size_t m = grid_->size();
    std::vector<double> values(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double* row = &weighted_kernel_[i * m];
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) sum += row[j] * previous.values[j];
        values[i] = sign_ * sum / (std::numbers::pi * t2_[i]);
    }
    return make_density(grid_, std::move(values), evaluate(previous, 0.0), previous.order + 1);
}

double NeumannOperator::evaluate(const SpectralDensity& previous, double k) const {
    require_same_grid(previous, grid_);
    const auto nodes = grid_->nodes();
    const auto weights = grid_->weights();
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) sum += kernel(k, nodes[j]) * weights[j] * previous.values[j];
    return sign_ * sum / (std::numbers::pi * kernels_.t_n(2, k));
}

void check_interpolation(const SpectralDensity& density, const std::function<double(double)>& exact) {
    double scale = std::abs(density.value_at_zero);
    for (double v : density.values) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return;
    const double tol = density.grid->settings().interpolation_tol;
    for (double k : density.grid->probe_points()) {
        const double defect = std::abs(density(k) - exact(k));
        if (defect > tol * scale) {
            fail(ErrorKind::GridTooCoarse, "interpolation defect " + std::to_string(defect / scale) +
                                               " (relative) at k = " + std::to_string(k) + " for order " +
                                               std::to_string(density.order));
        }
    }
}

void NeumannOperator::self_check(const SpectralDensity& previous, const SpectralDensity& result) const {
    check_interpolation(result, [&](double k) { return evaluate(previous, k); });
}

}  // namespace kramers
