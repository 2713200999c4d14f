#pragma once

#include <cstdint>
#include <memory>

#include "kramers/quadrature.hpp"

namespace kramers {

/// Special functions of the characteristic equation. Every quantity is a
/// Gaussian moment over t ∈ [0, ∞) with resolvent factors 1/(1 + k²t²):
///
///   T_n(k)      = (2/√π) ∫ e^{-t²} tⁿ / (1 + k²t²) dt
///   J(k, k₁)    = (2/√π) ∫ e^{-t²} t  / ((1 + k²t²)(1 + k₁²t²)) dt
///   J_n(k, k₁)  = (2/√π) ∫ e^{-t²} tⁿ / ((1 + k²t²)(1 + k₁²t²)) dt
///
/// The Neumann iteration only talks to this interface, which lets tests swap
/// in degenerate kernels.
class KernelSet {
public:
    virtual ~KernelSet() = default;

    virtual double t_n(int n, double k) const = 0;
    virtual double j_kernel(double k, double k1) const = 0;
    virtual double j_n(int n, double k, double k1) const = 0;

    /// Forward-problem forcing φ₀(k) = (√π/2)T₃(k) − T₄(k).
    virtual double phi0_fwd(double k) const = 0;
    /// Inverse-problem forcing φ₀(k) = T₃(k) − (2/√π)T₄(k).
    virtual double phi0_inv(double k) const = 0;

    /// S(k,k₁) = k₁²[J₅(k,k₁) − √π T₃(k)T₃(k₁)], so that
    /// k²S(k,k₁) = J(k,k₁) − √π T₁(k)T₁(k₁).
    virtual double s_fwd(double k, double k1) const = 0;
    /// S(k,k₁) = J₃(k,k₁) − 2T₁(k₁)T₄(k), so that
    /// k²S(k,k₁) = 2T₁(k₁)T₂(k) − J(k,k₁).
    virtual double s_inv(double k, double k1) const = 0;

    /// L(k) = k²T₂(k).
    double big_l(double k) const;
};

/// Quadrature settings for the t-integrals: only `node_count` (Gauss nodes
/// per dyadic panel) is used; the panel layout adapts to the wave numbers.
QuadratureSpec default_kernel_spec();

class KernelSuite final : public KernelSet {
public:
    explicit KernelSuite(QuadratureSpec spec = default_kernel_spec(), bool memoize = false);
    ~KernelSuite() override;
    KernelSuite(KernelSuite&&) noexcept;
    KernelSuite& operator=(KernelSuite&&) noexcept;

    double t_n(int n, double k) const override;
    double j_kernel(double k, double k1) const override;
    double j_n(int n, double k, double k1) const override;
    double phi0_fwd(double k) const override;
    double phi0_inv(double k) const override;
    double s_fwd(double k, double k1) const override;
    double s_inv(double k, double k1) const override;

    const QuadratureSpec& spec() const noexcept { return spec_; }
    bool memoized() const noexcept { return memo_ != nullptr; }
    std::size_t memo_size() const;

private:
    struct Memo;

    double moment(int function_id, int power, double k, double k1) const;

    QuadratureSpec spec_;
    std::unique_ptr<Memo> memo_;
};

}  // namespace kramers
