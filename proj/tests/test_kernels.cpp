#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "kramers/kernels.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace kramers;
using testing::error_kind;

namespace {

const double kSqrtPi = oracle::kSqrtPi;

const KernelSuite& suite() {
    static const KernelSuite ks;
    return ks;
}

// The same integral at four times the Gauss nodes per panel.
const KernelSuite& fine_suite() {
    static const KernelSuite ks = [] {
        QuadratureSpec s = default_kernel_spec();
        s.node_count *= 4;
        return KernelSuite(s);
    }();
    return ks;
}

}  // namespace

TEST_CASE("moment values at k = 0") {
    CHECK(suite().t_n(1, 0.0) == doctest::Approx(1.0 / kSqrtPi).epsilon(1e-14));
    CHECK(suite().t_n(2, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(suite().t_n(3, 0.0) == doctest::Approx(1.0 / kSqrtPi).epsilon(1e-14));
    CHECK(suite().t_n(4, 0.0) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(suite().j_n(5, 0.0, 0.0) == doctest::Approx(2.0 / kSqrtPi).epsilon(1e-14));
    CHECK(suite().j_kernel(0.0, 0.0) == doctest::Approx(1.0 / kSqrtPi).epsilon(1e-14));
    CHECK(suite().phi0_fwd(0.0) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(suite().phi0_inv(0.0) == doctest::Approx(-0.5 / kSqrtPi).epsilon(1e-13));
}

TEST_CASE("quadruple-resolution and independent oracles") {
    CHECK(std::abs(suite().t_n(2, 3.0) - fine_suite().t_n(2, 3.0)) < 1e-13);
    CHECK(std::abs(suite().t_n(2, 3.0) - oracle::t_n(2, 3.0)) < 1e-13);
    for (int n = 1; n <= 5; ++n) {
        for (double k : {1e-3, 0.1, 1.0, 7.0, 300.0, 1e5}) {
            const double ref = oracle::t_n(n, k);
            CHECK(std::abs(suite().t_n(n, k) - ref) <= 1e-12 * std::abs(ref));
        }
    }
    // φ₀ as a single integral: (2/√π)∫ (√π/2 − t) e^{-t²} t³/(1+k²t²) dt
    const double k = 10.0;
    const double direct = 2.0 / kSqrtPi * oracle::gauss_moment([&](double t) {
                              return (0.5 * kSqrtPi - t) * t * t * t / (1.0 + k * k * t * t);
                          });
    CHECK(std::abs(suite().phi0_fwd(k) - direct) < 1e-13);
    CHECK(std::abs(suite().phi0_inv(2.0) - fine_suite().phi0_inv(2.0)) < 1e-13);
    CHECK(std::abs(suite().s_inv(2.0, 0.7) - fine_suite().s_inv(2.0, 0.7)) < 1e-13);
    CHECK(std::abs(suite().s_fwd(1.0, 1.0) - (fine_suite().j_kernel(1.0, 1.0) -
                                              kSqrtPi * fine_suite().t_n(1, 1.0) * fine_suite().t_n(1, 1.0))) < 1e-12);
}

TEST_CASE("dispersion function") {
    CHECK(suite().big_l(0.0) == 0.0);
    const double k = 1e-4;
    CHECK(std::abs(suite().big_l(k) / (k * k) - 0.5) < 1e-6);
    // L(k) = 1 − (2/√π)∫ e^{-t²}/(1+k²t²) dt
    const double direct = 1.0 - 2.0 / kSqrtPi * oracle::gauss_moment([](double t) { return 1.0 / (1.0 + t * t); });
    CHECK(std::abs(suite().big_l(1.0) - direct) < 1e-10);
}

TEST_CASE("reductions and closed forms") {
    for (double k : {0.0, 0.5, 2.0}) CHECK(std::abs(suite().j_kernel(k, 0.0) - suite().t_n(1, k)) < 1e-14);
    for (double k : {0.0, 1.0}) CHECK(std::abs(suite().j_n(3, k, 0.0) - suite().t_n(3, k)) < 1e-14);
    // J(1,2) from partial fractions
    const double pf = (4.0 * suite().t_n(1, 2.0) - suite().t_n(1, 1.0)) / 3.0;
    CHECK(std::abs(suite().j_kernel(1.0, 2.0) - pf) < 1e-10);
    CHECK(std::abs(suite().j_n(3, 1.0, 2.0) - (suite().t_n(1, 1.0) - suite().t_n(1, 2.0)) / 3.0) < 1e-10);
    for (double k : {0.0, 1.0, 5.0}) CHECK(suite().s_fwd(k, 0.0) == 0.0);
    for (double k1 : {0.3, 2.0}) {
        CHECK(std::abs(suite().s_inv(0.0, k1) - (suite().t_n(3, k1) - 1.5 * suite().t_n(1, k1))) < 1e-13);
    }
}

TEST_CASE("forcing identities") {
    const double k = 1.7;
    CHECK(std::abs(k * k * suite().phi0_fwd(k) - (suite().t_n(2, k) - 0.5 * kSqrtPi * suite().t_n(1, k))) < 1e-10);
    for (double kk : {0.3, 1.0, 5.0}) {
        CHECK(std::abs(kk * kk * suite().phi0_inv(kk) + suite().t_n(1, kk) - 2.0 / kSqrtPi * suite().t_n(2, kk)) <
              1e-10);
    }
}

TEST_CASE("kernel factorizations") {
    for (auto [k, k1] : {std::pair{0.5, 0.5}, std::pair{1.0, 3.0}, std::pair{4.0, 0.2}}) {
        const double rhs = suite().j_kernel(k, k1) - kSqrtPi * suite().t_n(1, k) * suite().t_n(1, k1);
        CHECK(std::abs(k * k * suite().s_fwd(k, k1) - rhs) < 1e-10);
    }
    for (auto [k, k1] : {std::pair{1.0, 1.0}, std::pair{0.2, 5.0}}) {
        const double rhs = 2.0 * suite().t_n(1, k1) * suite().t_n(2, k) - suite().j_kernel(k, k1);
        CHECK(std::abs(k * k * suite().s_inv(k, k1) - rhs) < 1e-10);
    }
}

TEST_CASE("randomized identities") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> wave(0.0, 10.0);
    for (int i = 0; i < 20; ++i) {
        const double k = wave(rng);
        const double k1 = wave(rng);
        const auto& ks = suite();
        CHECK(std::abs(ks.t_n(2, k) - (0.5 - k * k * ks.t_n(4, k))) < 1e-10);
        if (std::abs(k - k1) > 1e-3) {
            CHECK(std::abs(ks.j_kernel(k, k1) * (k1 * k1 - k * k) - (k1 * k1 * ks.t_n(1, k1) - k * k * ks.t_n(1, k))) <
                  1e-10);
        }
        CHECK(std::abs(ks.t_n(1, k) - ks.t_n(1, k1) - (k1 * k1 - k * k) * ks.j_n(3, k, k1)) < 1e-10);
        CHECK(ks.j_kernel(k, k1) == ks.j_kernel(k1, k));
        CHECK(ks.j_n(3, k, k1) == ks.j_n(3, k1, k));
        CHECK(ks.j_n(5, k, k1) == ks.j_n(5, k1, k));
    }
}

TEST_CASE("monotone decrease and positivity") {
    for (int n = 1; n <= 5; ++n) {
        double prev = suite().t_n(n, 0.0);
        for (double k = 0.01; k < 1e4; k *= 1.3) {
            const double v = suite().t_n(n, k);
            CHECK(v > 0.0);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("finite across the whole range") {
    for (double k : {0.0, 1e-8, 1.0, 1e3, 1e6}) {
        for (double k1 : {0.0, 1e-8, 1.0, 1e3, 1e6}) {
            CHECK(std::isfinite(suite().j_kernel(k, k1)));
            CHECK(std::isfinite(suite().j_n(5, k, k1)));
            CHECK(std::isfinite(suite().s_fwd(k, k1)));
            CHECK(std::isfinite(suite().s_inv(k, k1)));
        }
    }
}

TEST_CASE("argument checks") {
    CHECK(error_kind([] { suite().t_n(0, 1.0); }) == ErrorKind::UnsupportedOrder);
    CHECK(error_kind([] { suite().t_n(6, 1.0); }) == ErrorKind::UnsupportedOrder);
    CHECK(error_kind([] { suite().j_n(4, 1.0, 1.0); }) == ErrorKind::UnsupportedOrder);
    CHECK(error_kind([] { suite().t_n(2, -1.0); }) == ErrorKind::InvalidArgument);
    CHECK(error_kind([] { suite().j_kernel(1.0, std::nan("")); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("memoized values equal fresh values under concurrent use") {
    const KernelSuite memo(default_kernel_spec(), true);
    std::vector<double> ks;
    for (int i = 0; i < 40; ++i) ks.push_back(0.05 * i * i);
    std::vector<std::thread> pool;
    std::vector<int> mismatches(4, 0);
    for (int w = 0; w < 4; ++w) {
        pool.emplace_back([&, w] {
            for (double k : ks) {
                for (double k1 : ks) {
                    if (memo.s_fwd(k, k1) != suite().s_fwd(k, k1)) ++mismatches[w];
                    if (memo.s_inv(k1, k) != suite().s_inv(k1, k)) ++mismatches[w];
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (int m : mismatches) CHECK(m == 0);
    CHECK(memo.memo_size() > 0);
    CHECK(suite().memo_size() == 0);
}
