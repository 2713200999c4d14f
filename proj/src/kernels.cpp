#include "kramers/kernels.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "kramers/error.hpp"

namespace kramers {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;

double ipow(double t, int n) {
    double r = t;
    for (int i = 1; i < n; ++i) r *= t;
    return r;
}

void check_wave_number(double k) {
    if (!std::isfinite(k) || k < 0.0) {
        fail(ErrorKind::InvalidArgument, "wave number must be finite and nonnegative, got " + std::to_string(k));
    }
}

struct MemoKey {
    std::uint64_t k;
    std::uint64_t k1;
    int id;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& key) const noexcept {
        std::uint64_t h = key.k * 0x9E3779B97F4A7C15ULL;
        h ^= key.k1 + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(key.id) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

double KernelSet::big_l(double k) const { return k * k * t_n(2, k); }

QuadratureSpec default_kernel_spec() {
    QuadratureSpec spec;
    spec.node_count = 20;
    spec.mapping = Mapping::gauss_weighted_halfline;
    spec.rel_tol = 1e-14;
    spec.abs_tol = 1e-16;
    spec.split_points = {};
    return spec;
}

// Keys are exact bit patterns, so a cached value is the value that a fresh
// evaluation would return.
struct KernelSuite::Memo {
    mutable std::shared_mutex mutex;
    std::unordered_map<MemoKey, double, MemoKeyHash> values;
};

KernelSuite::KernelSuite(QuadratureSpec spec, bool memoize) : spec_(std::move(spec)) {
    spec_.validate();
    if (memoize) memo_ = std::make_unique<Memo>();
}

KernelSuite::~KernelSuite() = default;
KernelSuite::KernelSuite(KernelSuite&&) noexcept = default;
KernelSuite& KernelSuite::operator=(KernelSuite&&) noexcept = default;

std::size_t KernelSuite::memo_size() const {
    if (!memo_) return 0;
    std::shared_lock lock(memo_->mutex);
    return memo_->values.size();
}

// function_id 0: single resolvent (T_n); 1: double resolvent (J, J_n).
double KernelSuite::moment(int function_id, int power, double k, double k1) const {
    if (function_id == 1 && k > k1) std::swap(k, k1);  // exact symmetry
    const MemoKey key{std::bit_cast<std::uint64_t>(k), std::bit_cast<std::uint64_t>(k1), function_id * 8 + power};
    if (memo_) {
        std::shared_lock lock(memo_->mutex);
        if (auto it = memo_->values.find(key); it != memo_->values.end()) return it->second;
    }

    const double kmax = std::max(k, k1);
    const auto rule = gauss_weighted_rule(spec_.node_count, kmax > 0.0 ? 1.0 / kmax : 0.0);
    const double k2 = k * k;
    const double k12 = k1 * k1;
    double sum = 0.0;
    if (function_id == 0) {
        for (const auto& node : rule) {
            const double t = node.abscissa;
            const double t2 = t * t;
            sum += node.weight * ipow(t, power) / (1.0 + k2 * t2);
        }
    } else {
        for (const auto& node : rule) {
            const double t = node.abscissa;
            const double t2 = t * t;
            sum += node.weight * ipow(t, power) / ((1.0 + k2 * t2) * (1.0 + k12 * t2));
        }
    }
    const double value = kTwoOverSqrtPi * sum;

    if (memo_) {
        std::unique_lock lock(memo_->mutex);
        memo_->values.emplace(key, value);
    }
    return value;
}

double KernelSuite::t_n(int n, double k) const {
    if (n < 1 || n > 5) fail(ErrorKind::UnsupportedOrder, "T_n is provided for n = 1..5, got " + std::to_string(n));
    check_wave_number(k);
    return moment(0, n, k, 0.0);
}

double KernelSuite::j_kernel(double k, double k1) const {
    check_wave_number(k);
    check_wave_number(k1);
    return moment(1, 1, k, k1);
}

double KernelSuite::j_n(int n, double k, double k1) const {
    if (n != 3 && n != 5) fail(ErrorKind::UnsupportedOrder, "J_n is provided for n = 3, 5, got " + std::to_string(n));
    check_wave_number(k);
    check_wave_number(k1);
    return moment(1, n, k, k1);
}

double KernelSuite::phi0_fwd(double k) const { return 0.5 * kSqrtPi * t_n(3, k) - t_n(4, k); }

double KernelSuite::phi0_inv(double k) const { return t_n(3, k) - kTwoOverSqrtPi * t_n(4, k); }

double KernelSuite::s_fwd(double k, double k1) const {
    return k1 * k1 * (j_n(5, k, k1) - kSqrtPi * t_n(3, k) * t_n(3, k1));
}

double KernelSuite::s_inv(double k, double k1) const { return j_n(3, k, k1) - 2.0 * t_n(1, k1) * t_n(4, k); }

}  // namespace kramers
