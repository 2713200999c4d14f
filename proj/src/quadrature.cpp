#include "kramers/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "kramers/error.hpp"

namespace kramers {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSubdivisions = 1 << 14;
constexpr int kMaxDepth = 40;

GaussLegendreRule compute_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.barycentric.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // descending from the Newton guesses; store ascending
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[n - 1 - i] = w;
        rule.weights[i] = w;
    }
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes[i];
        const double b = std::sqrt((1.0 - x * x) * rule.weights[i]);
        rule.barycentric[i] = (i % 2 == 0) ? b : -b;
    }
    return rule;
}

double checked(double v, double at) {
    if (!std::isfinite(v)) {
        fail(ErrorKind::NonFinite, "integrand returned " + std::to_string(v) + " at " + std::to_string(at));
    }
    return v;
}

struct PanelSum {
    double value;
    double magnitude;  // Σ|w·f|, for the roundoff floor
};

PanelSum gauss_panel(const Integrand& f, double a, double b, const GaussLegendreRule& rule) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    double mag = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = mid + half * rule.nodes[i];
        const double term = rule.weights[i] * checked(f(t), t);
        sum += term;
        mag += std::abs(term);
    }
    return {sum * half, mag * std::abs(half)};
}

struct Adaptive {
    const Integrand& f;
    const GaussLegendreRule& high;
    const GaussLegendreRule& low;
    double abs_tol;
    double rel_tol;
    int subdivisions = 0;

    double run(double a, double b) {
        struct Item {
            double a, b;
            int depth;
        };
        std::vector<Item> stack{{a, b, 0}};
        double total = 0.0;
        while (!stack.empty()) {
            const Item it = stack.back();
            stack.pop_back();
            const PanelSum hi = gauss_panel(f, it.a, it.b, high);
            const PanelSum lo = gauss_panel(f, it.a, it.b, low);
            const double err = std::abs(hi.value - lo.value);
            const double allowed = std::max({abs_tol, rel_tol * std::abs(hi.value), 64.0 * kEps * hi.magnitude});
            if (err <= allowed) {
                total += hi.value;
                continue;
            }
            if (it.depth >= kMaxDepth || ++subdivisions > kMaxSubdivisions) {
                fail(ErrorKind::ToleranceNotMet, "adaptive refinement stalled on [" + std::to_string(it.a) + ", " +
                                                     std::to_string(it.b) + "], error estimate " +
                                                     std::to_string(err));
            }
            const double m = 0.5 * (it.a + it.b);
            stack.push_back({m, it.b, it.depth + 1});
            stack.push_back({it.a, m, it.depth + 1});
        }
        return total;
    }
};

std::vector<double> breakpoints_from_zero(const std::vector<double>& splits, double upto) {
    std::vector<double> out{0.0};
    for (double s : splits) {
        if (s > out.back() && s < upto) out.push_back(s);
    }
    if (upto > out.back()) out.push_back(upto);
    return out;
}

/// Exponent p of a local c·k^-p fit through (a, ga), (b, gb); NaN when the two
/// samples do not share a sign.
double decay_exponent(double a, double ga, double b, double gb) {
    if (ga == 0.0 || gb == 0.0 || (ga > 0) != (gb > 0)) return std::numeric_limits<double>::quiet_NaN();
    return -std::log(gb / ga) / std::log(b / a);
}

}  // namespace

void QuadratureSpec::validate() const {
    if (node_count < 8) fail(ErrorKind::InvalidArgument, "node_count must be >= 8");
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) fail(ErrorKind::InvalidArgument, "rel_tol must lie in (0, 1)");
    if (!(abs_tol > 0.0 && abs_tol < 1.0)) fail(ErrorKind::InvalidArgument, "abs_tol must lie in (0, 1)");
    for (std::size_t i = 0; i < split_points.size(); ++i) {
        if (!std::isfinite(split_points[i]) || split_points[i] < 0.0) {
            fail(ErrorKind::InvalidArgument, "split points must be finite and nonnegative");
        }
        if (i > 0 && split_points[i] <= split_points[i - 1]) {
            fail(ErrorKind::InvalidArgument, "split points must be strictly increasing");
        }
    }
}

QuadratureSpec QuadratureSpec::doubled() const {
    QuadratureSpec out = *this;
    out.node_count *= 2;
    return out;
}

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "Gauss-Legendre order must be positive");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(compute_gauss_legendre(n));
    return *slot;
}

double integrate_interval(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
    spec.validate();
    if (a == b) return 0.0;
    Adaptive ad{f, gauss_legendre(spec.node_count), gauss_legendre(spec.node_count / 2), spec.abs_tol, spec.rel_tol};
    return ad.run(a, b);
}

double integrate_gauss_weighted(const Integrand& f, const QuadratureSpec& spec) {
    spec.validate();
    // e^{-t²} < 1e-62 past t = 12
    const double upto = std::max(12.0, spec.split_points.empty() ? 0.0 : spec.split_points.back());
    const auto breaks = breakpoints_from_zero(spec.split_points, upto);
    const Integrand weighted = [&f](double t) { return std::exp(-t * t) * f(t); };
    Adaptive ad{weighted, gauss_legendre(spec.node_count), gauss_legendre(spec.node_count / 2), spec.abs_tol,
                spec.rel_tol};
    double sum = 0.0;
    for (std::size_t i = 1; i < breaks.size(); ++i) sum += ad.run(breaks[i - 1], breaks[i]);
    return sum;
}

double integrate_halfline(const Integrand& g, const QuadratureSpec& spec) {
    spec.validate();
    auto breaks = breakpoints_from_zero(spec.split_points, spec.split_points.empty() ? 1.0 : spec.split_points.back());
    if (breaks.size() < 3) breaks = {0.0, 0.5 * breaks.back(), breaks.back()};
    Adaptive ad{g, gauss_legendre(spec.node_count), gauss_legendre(spec.node_count / 2), spec.abs_tol, spec.rel_tol};
    double sum = 0.0;
    for (std::size_t i = 1; i < breaks.size(); ++i) sum += ad.run(breaks[i - 1], breaks[i]);

    const std::size_t m = breaks.size() - 1;
    double a = breaks[m - 1];
    double b = breaks[m];
    double ga = checked(g(a), a);
    double gb = checked(g(b), b);
    double p_prev = std::numeric_limits<double>::quiet_NaN();
    if (m >= 2 && breaks[m - 2] > 0.0) {
        const double a0 = breaks[m - 2];
        p_prev = decay_exponent(a0, checked(g(a0), a0), a, ga);
    }
    constexpr double kMaxK = 1e18;
    while (true) {
        if (ga == 0.0 && gb == 0.0) return sum;
        const double p = decay_exponent(a, ga, b, gb);
        if (std::isfinite(p)) {
            if (p <= 1.0 && std::isfinite(p_prev) && p_prev <= 1.0) {
                fail(ErrorKind::TailDivergence, "fitted decay exponent " + std::to_string(p) + " <= 1 near k = " +
                                                    std::to_string(b));
            }
            if (p > 1.0) {
                const double tail = gb * b / (p - 1.0);
                const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(sum + tail));
                const double drift = std::isfinite(p_prev) ? std::abs(p - p_prev) : 1.0;
                if (std::abs(tail) <= tol || std::abs(tail) * drift / (p - 1.0) <= tol) return sum + tail;
            }
        }
        if (b > kMaxK) fail(ErrorKind::ToleranceNotMet, "tail of half-line integral did not settle");
        const double c = 4.0 * b;
        sum += ad.run(b, c);
        p_prev = p;
        a = b;
        ga = gb;
        b = c;
        gb = checked(g(b), b);
    }
}

double integrate_fourier_cos(const Integrand& g, double x, const QuadratureSpec& spec) {
    spec.validate();
    if (!std::isfinite(x) || x < 0.0) fail(ErrorKind::InvalidArgument, "x must be finite and nonnegative");
    if (x == 0.0) return integrate_halfline(g, spec);

    const Integrand f = [&g, x](double k) { return g(k) * std::cos(k * x); };
    Adaptive ad{f, gauss_legendre(spec.node_count), gauss_legendre(spec.node_count / 2), spec.abs_tol, spec.rel_tol};

    const double plain_end =
        (x < 0.5 && !spec.split_points.empty()) ? std::max(4.0, spec.split_points.back()) : 4.0;
    const auto breaks = breakpoints_from_zero(spec.split_points, plain_end);
    double sum = 0.0;
    for (std::size_t i = 1; i < breaks.size(); ++i) sum += ad.run(breaks[i - 1], breaks[i]);

    const double half_period = std::numbers::pi / x;
    const int per_panel = std::max(1, spec.node_count / 16);
    long long m = static_cast<long long>(std::ceil(plain_end / half_period));
    double k = m * half_period;
    if (k > plain_end) sum += ad.run(plain_end, k);

    constexpr long long kMaxPanels = 400000;
    for (long long panel = 0; panel < kMaxPanels; ++panel) {
        const double next = (m + per_panel) * half_period;
        sum += ad.run(k, next);
        m += per_panel;
        const double prev = k;
        k = next;
        const double gk = checked(g(k), k);
        const double gp = checked(g(prev), prev);
        if (gk == 0.0 && gp == 0.0) return sum;
        const double p = decay_exponent(prev, gp, k, gk);
        if (!std::isfinite(p) || p <= 0.0) continue;
        // sin(kx) = 0 here, so the leading boundary term is the derivative one
        const double cos_kx = (m % 2 == 0) ? 1.0 : -1.0;
        const double lead = p * gk * cos_kx / (k * x * x);
        const double next_term = p * (p + 1.0) * std::abs(gk) / (k * k * x * x * x);
        const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(sum + lead));
        if (next_term <= tol) return sum + lead;
    }
    fail(ErrorKind::ToleranceNotMet, "oscillatory tail did not settle for x = " + std::to_string(x));
}

std::span<const QuadratureNode> gauss_weighted_rule(int n, double finest_scale) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "rule order must be >= 2");
    // Dyadic level of the first panel [0, 2^level]: at most finest_scale / 8,
    // never coarser than [0, 1/2].
    int level = -1;
    if (finest_scale > 0.0 && std::isfinite(finest_scale)) {
        level = std::min(-1, static_cast<int>(std::floor(std::log2(finest_scale / 8.0))));
    }
    level = std::max(level, -80);

    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<QuadratureNode>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, level}];
    if (!slot) {
        const GaussLegendreRule& gl = gauss_legendre(n);
        std::vector<double> breaks{0.0};
        for (int j = level; j < 0; ++j) breaks.push_back(std::ldexp(1.0, j));
        for (double t : {1.0, 2.0, 3.0, 4.0, 5.5, 7.0, 9.0}) breaks.push_back(t);
        auto nodes = std::make_unique<std::vector<QuadratureNode>>();
        nodes->reserve((breaks.size() - 1) * n);
        for (std::size_t p = 1; p < breaks.size(); ++p) {
            const double half = 0.5 * (breaks[p] - breaks[p - 1]);
            const double mid = 0.5 * (breaks[p] + breaks[p - 1]);
            for (int i = 0; i < n; ++i) {
                const double t = mid + half * gl.nodes[i];
                nodes->push_back({t, half * gl.weights[i] * std::exp(-t * t)});
            }
        }
        slot = std::move(nodes);
    }
    return *slot;
}

std::vector<IntegrandSample> tabulate(const Integrand& f, const QuadratureSpec& spec) {
    spec.validate();
    const auto breaks =
        breakpoints_from_zero(spec.split_points, spec.split_points.empty() ? 1.0 : spec.split_points.back());
    const GaussLegendreRule& gl = gauss_legendre(spec.node_count);
    std::vector<IntegrandSample> out;
    for (std::size_t p = 1; p < breaks.size(); ++p) {
        const double half = 0.5 * (breaks[p] - breaks[p - 1]);
        const double mid = 0.5 * (breaks[p] + breaks[p - 1]);
        for (int i = 0; i < spec.node_count; ++i) {
            const double t = mid + half * gl.nodes[i];
            out.push_back({t, half * gl.weights[i], f(t)});
        }
    }
    return out;
}

}  // namespace kramers
