#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace kramers {

/// One published reference value compared against a fresh computation.
struct ReferenceCheck {
    std::string name;
    double expected = 0.0;
    std::string reference;  // where the expected value comes from
    double computed = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Recomputes every tabulated reference value of the Kramers problem at
/// default settings: kernel values and identities, forward and inverse
/// series coefficients, q = 1 slip and wall-velocity partial sums.
std::vector<ReferenceCheck> run_reference_checks();

nlohmann::json checks_to_json(const std::vector<ReferenceCheck>& checks);

}  // namespace kramers
