#pragma once

#include <optional>

#include "kramers/error.hpp"

namespace testing {

/// Kind of the kramers::Error thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<kramers::ErrorKind> error_kind(F&& f) {
    try {
        f();
    } catch (const kramers::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace testing
