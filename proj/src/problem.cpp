#include "kramers/problem.hpp"

#include <cmath>
#include <string>

#include "kramers/error.hpp"

namespace kramers {

QuadratureSpec default_profile_spec() {
    QuadratureSpec spec;
    spec.node_count = 32;
    spec.mapping = Mapping::fourier_cos;
    spec.rel_tol = 1e-10;
    spec.abs_tol = 1e-13;
    spec.split_points = {1.0, 4.0, 16.0, 64.0};
    return spec;
}

void ProblemConfig::validate() const {
    if (!(q >= 0.0 && q <= 1.0)) fail(ErrorKind::InvalidArgument, "q must lie in [0, 1], got " + std::to_string(q));
    if (order < 0 || order > kMaxOrder) {
        fail(ErrorKind::InvalidArgument, "order must lie in [0, " + std::to_string(kMaxOrder) + "]");
    }
    const double d = std::visit([](auto v) { return v.value; }, driving);
    if (!std::isfinite(d)) fail(ErrorKind::InvalidArgument, "driving value must be finite");
    quad.validate();
    kernel_quad.validate();
    grid.validate();
    if (wall_slip == WallSlip::exact_benchmark && q != 1.0) {
        fail(ErrorKind::InvalidArgument, "the exact slip benchmark exists only for q = 1");
    }
}

double ProblemConfig::gradient() const {
    if (const auto* g = std::get_if<Gradient>(&driving)) return g->value;
    fail(ErrorKind::InvalidArgument, "problem is driven by a slip velocity, not a gradient");
}

double ProblemConfig::slip() const {
    if (const auto* s = std::get_if<SlipVelocity>(&driving)) return s->value;
    fail(ErrorKind::InvalidArgument, "problem is driven by a gradient, not a slip velocity");
}

ProblemConfig ProblemConfig::doubled() const {
    ProblemConfig out = *this;
    out.quad = quad.doubled();
    out.kernel_quad = kernel_quad.doubled();
    out.grid = grid.doubled();
    return out;
}

}  // namespace kramers
