#include "kramers/io.hpp"

#include <cstdio>
#include <ostream>

#include "kramers/error.hpp"

namespace kramers {

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string to_string(SeriesKind kind) { return kind == SeriesKind::forward ? "forward" : "inverse"; }

nlohmann::json series_to_json(const SeriesExpansion& series) {
    return {{"kind", to_string(series.kind)}, {"order", series.order()}, {"coefficients", series.coefficients}};
}

SeriesExpansion series_from_json(const nlohmann::json& j) {
    SeriesExpansion out;
    try {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "forward") {
            out.kind = SeriesKind::forward;
        } else if (kind == "inverse") {
            out.kind = SeriesKind::inverse;
        } else {
            fail(ErrorKind::InvalidArgument, "unknown series kind '" + kind + "'");
        }
        out.coefficients = j.at("coefficients").get<std::vector<double>>();
        if (j.at("order").get<int>() != out.order()) {
            fail(ErrorKind::InvalidArgument, "series order does not match the coefficient count");
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("malformed series JSON: ") + e.what());
    }
    return out;
}

nlohmann::json profile_to_json(const VelocityProfile& profile) {
    return {{"q", profile.q},
            {"order", profile.order},
            {"x_nodes", profile.x_nodes},
            {"total", profile.total},
            {"asymptote", profile.asymptote},
            {"correction", profile.correction}};
}

void write_profile_csv(std::ostream& out, const VelocityProfile& profile) {
    out << "x,U_total,U_asymptote,U_correction\n";
    for (std::size_t i = 0; i < profile.x_nodes.size(); ++i) {
        out << format_number(profile.x_nodes[i]) << ',' << format_number(profile.total[i]) << ','
            << format_number(profile.asymptote[i]) << ',' << format_number(profile.correction[i]) << '\n';
    }
}

}  // namespace kramers
