#include "kramers/error.hpp"

namespace kramers {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
        case ErrorKind::TailDivergence: return "TailDivergence";
        case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorKind::GridTooCoarse: return "GridTooCoarse";
        case ErrorKind::DiffuseLimitSingular: return "DiffuseLimitSingular";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace kramers
