#include <doctest.h>

#include <cmath>
#include <complex>

#include "kramers/profile.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kramers;
using testing::error_kind;

namespace {

constexpr double kPi = oracle::kPi;

ProblemConfig diffuse(int order) {
    ProblemConfig c;
    c.order = order;
    return c;
}

const ForwardSolution& solution() {
    static const ForwardSolution s = solve_forward(diffuse(3));
    return s;
}

std::span<const SpectralDensity> first(std::size_t n) { return {solution().densities.data(), n}; }

}  // namespace

TEST_CASE("uniform nodes") {
    const auto x = uniform_nodes(30.0, 0.1);
    REQUIRE(x.size() == 301);
    CHECK(x.front() == 0.0);
    CHECK(x[10] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(x.back() == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(uniform_nodes(1.0, 0.3).size() == 4);
    CHECK(error_kind([] { uniform_nodes(1.0, 0.0); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { uniform_nodes(-1.0, 0.1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("profile assembly") {
    const std::vector<double> x{0.0, 0.5, 2.0};
    const auto p = assemble_profile(x, 1.2, 0.7, 0.4, 2, [](double) { return 0.0; });
    CHECK(p.total == p.asymptote);
    CHECK(p.asymptote[2] == doctest::Approx(1.2 + 1.4).epsilon(1e-15));
    CHECK(p.q == 0.4);
    CHECK(p.order == 2);
    const auto c = assemble_profile(x, 1.0, 1.0, 1.0, 0, [](double xx) { return -xx * xx; });
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(c.total[i] == c.asymptote[i] + c.correction[i]);
    const std::vector<double> unordered{0.0, 2.0, 1.0};
    CHECK(error_kind([&] { assemble_profile(unordered, 1.0, 1.0, 1.0, 0, [](double) { return 0.0; }); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("velocity correction") {
    const auto& quad = diffuse(2).quad;
    const double at_zero = velocity_correction(first(3), 1.0, 1.0, 0.0, quad);
    CHECK(at_zero < 0.0);
    CHECK(std::abs(velocity_correction(first(3), 1.0, 1.0, 50.0, quad)) < 1e-4 * std::abs(at_zero));

    SUBCASE("x = 0 agrees with the half-line integrals") {
        double sum = 0.0;
        for (int n = 0; n < 3; ++n) {
            const auto& e = solution().densities[n];
            sum += integrate_halfline([&](double k) { return e(k); }, quad) / kPi;
        }
        CHECK(std::abs(at_zero - sum) < 2.0 * (quad.abs_tol + quad.rel_tol * std::abs(sum)));
    }
    SUBCASE("x = 1 against a fine Simpson sum of the two-sided transform") {
        const auto e = combined_density(first(3), 1.0, 1.0);
        // (1/2π)∫_{-∞}^{∞} e^{ikx}E dk with E even
        const double ref = oracle::fourier_cos([&](double k) { return e(k); }, 1.0) / kPi;
        CHECK(std::abs(velocity_correction(first(3), 1.0, 1.0, 1.0, quad) - 0.5 * ref) < 1e-6);
    }
    SUBCASE("E_0 at x = 2 against a 10^6-panel Simpson sum") {
        const auto& e0 = solution().densities[0];
        const auto g = [&](double k) { return e0(k); };
        CHECK(std::abs(integrate_fourier_cos(g, 2.0, quad) - oracle::fourier_cos(g, 2.0)) < 1e-8);
    }
    SUBCASE("linear in the gradient and scaled by (2 - q)") {
        const double a = velocity_correction(first(2), 0.5, 1.0, 0.8, quad);
        CHECK(velocity_correction(first(2), 0.5, -2.0, 0.8, quad) == doctest::Approx(-2.0 * a).epsilon(1e-14));
    }
}

TEST_CASE("knudsen layer decay") {
    for (double q : {0.25, 0.5, 1.0}) {
        ProblemConfig c = diffuse(3);
        c.q = q;
        const auto x = uniform_nodes(30.0, 0.5);
        const auto p = full_profile(solution(), c, x);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(p.total[i] == p.asymptote[i] + p.correction[i]);
        for (std::size_t i = 1; i < x.size(); ++i) {
            if (x[i - 1] >= 2.0) CHECK(std::abs(p.correction[i]) < std::abs(p.correction[i - 1]));
        }
        CHECK(std::abs(p.correction[40]) < 1e-3 * std::abs(p.correction[0]));
        CHECK(std::abs(p.total.back() - p.asymptote.back()) < 1e-3);
        CHECK(p.asymptote[0] == doctest::Approx(slip_velocity(solution().series, q, 1.0)).epsilon(1e-15));
    }
}

TEST_CASE("wall velocity at q = 1") {
    ProblemConfig c = diffuse(2);
    c.wall_slip = WallSlip::exact_benchmark;
    const auto s = solve_forward(c);
    const auto sums = wall_velocity_partial_sums(s, c);
    REQUIRE(sums.size() == 3);
    CHECK(std::abs(sums[0] - 0.674744) < 1e-3);
    CHECK(std::abs(sums[1] - 0.710319) < 1e-3);
    CHECK(std::abs(sums[2] - 0.706802) < 1e-3);
    CHECK(std::abs(wall_velocity(s, c) - sums[2]) < 1e-9);  // one integral vs. a sum of three
    const std::vector<double> x{0.0};
    CHECK(std::abs(full_profile(s, c, x).total[0] - sums[2]) < 1e-9);

    c.q = 0.5;
    CHECK(error_kind([&] { wall_velocity(c); }) == ErrorKind::InvalidArgument);
    c.wall_slip = WallSlip::series;
    c.q = 0.0;
    CHECK(error_kind([&] { wall_velocity(c); }) == ErrorKind::DiffuseLimitSingular);
    CHECK(error_kind([&] { full_profile(c, x); }) == ErrorKind::DiffuseLimitSingular);
}

TEST_CASE("boundary distribution") {
    const auto e = combined_density(first(3), 1.0, 1.0);
    const std::vector<double> mu{-2.0, -1.0, -0.3, 0.0, 0.3, 1.0, 2.0};
    const auto h = boundary_distribution(e, mu);
    CHECK(h.side == Side::plus);
    CHECK(h.mu_nodes == mu);
    for (std::size_t i = 0; i < 3; ++i) CHECK(h.values[i] == h.values[mu.size() - 1 - i]);
    CHECK(h.values[3] == doctest::Approx(e.integral() / kPi).epsilon(1e-14));
    const double ref = oracle::simpson([&](double k) { return e(k) / (1.0 + k * k); }, 0.0, 2000.0, 1'000'000) / kPi;
    CHECK(std::abs(h.values[5] - ref) < 1e-6);
    for (double v : h.values) CHECK(std::isfinite(v));
    CHECK(boundary_distribution(e, mu, Side::minus).values == h.values);
}

TEST_CASE("spectral distribution functions") {
    const auto& s = solution();
    const double v0 = s.series.coefficients[0];
    for (double k : {0.0, 0.4, 3.0}) CHECK(phi_n(0, k, 0.0, s) == std::complex<double>(s.densities[0](k), 0.0));
    for (double mu : {-0.7, 0.2, 1.5}) {
        const auto z = phi_n(0, 0.0, mu, s);
        CHECK(z.imag() == 0.0);
        CHECK(z.real() == doctest::Approx(s.densities[0](0.0) + mu * mu - v0 * std::abs(mu)).epsilon(1e-14));
    }
    {
        const double k = 1.0;
        const double mu = 0.5;
        const double numerator = s.densities[0](k) + mu * mu - v0 * mu;
        CHECK(std::abs((1.0 + k * k * mu * mu) * std::norm(phi_n(0, k, mu, s)) - numerator * numerator) < 1e-12);
    }
    SUBCASE("first order") {
        const double k = 0.8;
        const double mu = -0.6;
        const auto& e0 = s.densities[0];
        const double inner =
            integrate_halfline([&](double k1) { return e0(k1) / (1.0 + k1 * k1 * mu * mu); }, QuadratureSpec{});
        const double numerator = s.densities[1](k) - s.series.coefficients[1] * std::abs(mu) - std::abs(mu) / kPi * inner;
        const auto expect = numerator / std::complex<double>(1.0, k * mu);
        CHECK(std::abs(phi_n(1, k, mu, s) - expect) < 1e-8);
    }
    CHECK(error_kind([&] { phi_n(4, 1.0, 0.5, s); }) == ErrorKind::UnsupportedOrder);
    CHECK(error_kind([&] { phi_n(-1, 1.0, 0.5, s); }) == ErrorKind::UnsupportedOrder);
}
