#include "kramers/validation.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <string>
#include <utility>

#include "kramers/kernels.hpp"
#include "kramers/neumann_forward.hpp"
#include "kramers/neumann_inverse.hpp"
#include "kramers/profile.hpp"

namespace kramers {

namespace {

constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;

class CheckList {
public:
    void add(std::string name, double expected, std::string reference, double computed, double tolerance) {
        ReferenceCheck c{std::move(name), expected, std::move(reference), computed, tolerance, false};
        c.passed = std::isfinite(computed) && std::abs(computed - expected) <= tolerance;
        checks_.push_back(std::move(c));
    }

    // expected is zero: the residual of an identity
    void identity(std::string name, std::string reference, double residual, double tolerance) {
        add(std::move(name), 0.0, std::move(reference), residual, tolerance);
    }

    std::vector<ReferenceCheck> take() { return std::move(checks_); }

private:
    std::vector<ReferenceCheck> checks_;
};

std::string arg(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void kernel_checks(const KernelSet& ks, CheckList& list) {
    list.add("T_1(0)", std::numbers::inv_sqrtpi, "closed form 1/sqrt(pi)", ks.t_n(1, 0.0), 1e-12);
    list.add("T_2(0)", 0.5, "closed form 1/2", ks.t_n(2, 0.0), 1e-12);
    for (double k : {0.0, 0.5, 2.0}) {
        list.identity("J(" + arg(k) + ",0) - T_1(" + arg(k) + ")", "reduction J(k,0) = T_1(k)",
                      ks.j_kernel(k, 0.0) - ks.t_n(1, k), 1e-10);
    }
    {
        const double k = 1.7;
        list.identity("k^2 phi0_fwd - (T_2 - sqrt(pi)/2 T_1) at k=1.7", "forward forcing identity",
                      k * k * ks.phi0_fwd(k) - (ks.t_n(2, k) - 0.5 * kSqrtPi * ks.t_n(1, k)), 1e-10);
    }
    for (double k : {0.3, 1.0, 5.0}) {
        list.identity("k^2 phi0_inv + T_1 - 2/sqrt(pi) T_2 at k=" + arg(k), "inverse forcing identity",
                      k * k * ks.phi0_inv(k) + ks.t_n(1, k) - 2.0 * std::numbers::inv_sqrtpi * ks.t_n(2, k), 1e-10);
    }
    for (auto [k, k1] : {std::pair{0.5, 0.5}, std::pair{1.0, 3.0}, std::pair{4.0, 0.2}}) {
        list.identity("k^2 S_fwd - (J - sqrt(pi) T_1 T_1) at (" + arg(k) + "," + arg(k1) + ")",
                      "forward kernel factorization",
                      k * k * ks.s_fwd(k, k1) - (ks.j_kernel(k, k1) - kSqrtPi * ks.t_n(1, k) * ks.t_n(1, k1)), 1e-10);
    }
    for (auto [k, k1] : {std::pair{1.0, 1.0}, std::pair{0.2, 5.0}}) {
        list.identity("k^2 S_inv - (2 T_1 T_2 - J) at (" + arg(k) + "," + arg(k1) + ")",
                      "inverse kernel factorization",
                      k * k * ks.s_inv(k, k1) - (2.0 * ks.t_n(1, k1) * ks.t_n(2, k) - ks.j_kernel(k, k1)), 1e-10);
    }
}

}  // namespace

std::vector<ReferenceCheck> run_reference_checks() {
    CheckList list;
    ProblemConfig config;
    const KernelSuite kernels(config.kernel_quad, true);
    kernel_checks(kernels, list);

    auto grid = std::make_shared<const SpectralGrid>(config.grid);
    const ForwardProblem fwd(kernels, grid);
    const ForwardSolution fs = fwd.build_series(3);
    const InverseProblem inv(kernels, grid);
    const InverseSolution is = inv.build_series(3);

    for (double k : {0.5, 2.0, 8.0}) {
        list.identity("E_0 L - (T_2 - V_0 T_1) at k=" + arg(k), "forward zeroth-order relation",
                      fs.densities[0](k) * kernels.big_l(k) - (kernels.t_n(2, k) - fs.series.coefficients[0] * kernels.t_n(1, k)),
                      1e-9);
    }
    for (double k : {0.5, 3.0}) {
        list.identity("E_0 L + T_1 - W_0 T_2 at k=" + arg(k), "inverse zeroth-order relation",
                      is.densities[0](k) * kernels.big_l(k) + kernels.t_n(1, k) - is.series.coefficients[0] * kernels.t_n(2, k),
                      1e-9);
    }

    const char* fwd_names[] = {"V_0", "V_1", "V_2", "V_3"};
    const double fwd_ref[] = {0.886227, 0.140523, -0.011556, 0.001092};
    for (int n = 0; n < 4; ++n) {
        list.add(fwd_names[n], fwd_ref[n], "forward slip series, order " + std::to_string(n),
                 fs.series.coefficients[n], n == 0 ? 1e-6 : 2e-4);
    }
    {
        std::vector<double> integrand(grid->size());
        const auto nodes = grid->nodes();
        for (std::size_t i = 0; i < nodes.size(); ++i) integrand[i] = kernels.t_n(1, nodes[i]) * fs.densities[0].values[i];
        list.add("int T_1 E_0 dk", -0.140523 * kSqrtPi, "-sqrt(pi) V_1", grid->integrate(integrand), 2e-4 * kSqrtPi);
    }
    const double slip_ref[] = {0.886227, 1.02675, 1.015194, 1.016287};
    for (int n = 0; n < 4; ++n) {
        list.add("V_sl(q=1), N=" + std::to_string(n), slip_ref[n], "slip partial sum at q = 1",
                 slip_velocity(fs.series.truncated(n), 1.0, 1.0), 3e-4);
    }

    const char* inv_names[] = {"W_0", "W_1", "W_2", "W_3"};
    const double inv_ref[] = {1.128379, -0.178919, 0.043083, -0.010556};
    for (int n = 0; n < 4; ++n) {
        list.add(inv_names[n], inv_ref[n], "inverse gradient series, order " + std::to_string(n),
                 is.series.coefficients[n], n == 0 ? 1e-6 : 3e-4);
    }
    const double c_ref[] = {0.949460, 0.992543, 0.981987};
    for (int n = 1; n <= 3; ++n) {
        list.add("C_" + std::to_string(n) + "(1)", c_ref[n - 1], "gradient partial sum at q = 1, V_sl = 1",
                 gradient(is.series.truncated(n), 1.0, 1.0), 5e-4);
    }
    list.add("g_v V_sl at q=1, N=3", 1.0, "exact product 1.016191 x 0.984066",
             gradient(is.series, 1.0, 1.0) * slip_velocity(fs.series, 1.0, 1.0), 1e-2);

    ProblemConfig wall = config;
    wall.wall_slip = WallSlip::exact_benchmark;
    ForwardSolution first_three{fs.series.truncated(2), {fs.densities.begin(), fs.densities.begin() + 3}};
    const auto sums = wall_velocity_partial_sums(first_three, wall);
    const double wall_ref[] = {0.674744, 0.710319, 0.706802};
    for (int n = 0; n < 3; ++n) {
        list.add("U(0), N=" + std::to_string(n), wall_ref[n], "wall velocity at q = 1, exact slip", sums[n], 1e-3);
    }
    return list.take();
}

nlohmann::json checks_to_json(const std::vector<ReferenceCheck>& checks) {
    nlohmann::json rows = nlohmann::json::array();
    bool all = true;
    for (const auto& c : checks) {
        rows.push_back({{"name", c.name},
                        {"expected", c.expected},
                        {"reference", c.reference},
                        {"computed", c.computed},
                        {"tolerance", c.tolerance},
                        {"pass", c.passed}});
        all = all && c.passed;
    }
    return {{"checks", rows}, {"all_passed", all}};
}

}  // namespace kramers
