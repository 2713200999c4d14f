#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kramers {

enum class ErrorKind {
    InvalidArgument,
    NonFinite,
    ToleranceNotMet,
    TailDivergence,
    UnsupportedOrder,
    GridTooCoarse,
    DiffuseLimitSingular,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map numerical failures and bad input onto distinct exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace kramers
