#pragma once

#include <variant>

#include "kramers/kernels.hpp"
#include "kramers/quadrature.hpp"
#include "kramers/spectral.hpp"

namespace kramers {

inline constexpr int kMaxOrder = 12;

/// Slip coefficient of the exact solution for purely diffuse walls (q = 1),
/// in units of the far-field gradient.
inline constexpr double kExactDiffuseSlip = 1.016191;

/// Far-field velocity gradient g_v (drives the forward problem).
struct Gradient {
    double value = 1.0;
};

/// Slip velocity V_sl (drives the inverse problem).
struct SlipVelocity {
    double value = 1.0;
};

/// Which slip velocity enters U(0) = V_sl + U_c(0).
enum class WallSlip {
    series,           // the order-N series value at the configured q
    exact_benchmark,  // kExactDiffuseSlip; only meaningful at q = 1
};

/// Quadrature settings for the k-integrals of physical-space quantities.
QuadratureSpec default_profile_spec();

struct ProblemConfig {
    double q = 1.0;
    std::variant<Gradient, SlipVelocity> driving = Gradient{};
    int order = 3;
    QuadratureSpec quad = default_profile_spec();
    QuadratureSpec kernel_quad = default_kernel_spec();
    GridSettings grid{};
    WallSlip wall_slip = WallSlip::series;

    void validate() const;
    /// Throws InvalidArgument unless the problem is driven by a gradient.
    double gradient() const;
    /// Throws InvalidArgument unless the problem is driven by a slip velocity.
    double slip() const;
    /// Twice the nodes everywhere: profile quadrature, kernel quadrature, grid.
    ProblemConfig doubled() const;
};

}  // namespace kramers
