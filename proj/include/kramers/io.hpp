#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "kramers/profile.hpp"
#include "kramers/spectral.hpp"

namespace kramers {

/// 12 significant digits, "%.12g".
std::string format_number(double value);

std::string to_string(SeriesKind kind);

/// {"kind": "forward"|"inverse", "order": N, "coefficients": [...]}
nlohmann::json series_to_json(const SeriesExpansion& series);
SeriesExpansion series_from_json(const nlohmann::json& j);

/// Mirrors VelocityProfile field by field.
nlohmann::json profile_to_json(const VelocityProfile& profile);

/// Header `x,U_total,U_asymptote,U_correction`, one row per node, LF endings.
void write_profile_csv(std::ostream& out, const VelocityProfile& profile);

}  // namespace kramers
