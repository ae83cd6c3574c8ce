#pragma once

#include "xxl/geometry.hpp"
#include "xxl/rational_angle.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace xxl {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view report_schema = "xxlcert-report/1";
inline constexpr std::string_view tool_version = "1.0.0";

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Decimal with 17 significant digits; "inf" for infinity.
std::string decimal(double value);

/// {"pi": "3π/5", "strict": true, "radians": "1.8849555921538759"}.
Json angle_json(const RationalAngle& angle);
/// Interval endpoints in radians with 40 significant digits, plus the
/// exact value when known and the precision used.
Json certified_angle_json(const CertifiedAngle& angle);

/// Report skeleton: schema, tool version, command and input digest.
Json report_header(std::string_view command, std::string_view input);

/// Indented plain-text rendering of a report; angle objects print as
/// "3π/5 (strict) ≈ 1.884955592".
std::string render_human(const Json& report);

}  // namespace xxl
