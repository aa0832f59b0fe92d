#pragma once

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "fockspace/cli/generators.hpp"
#include "fockspace/geometry.hpp"
#include "fockspace/numerics.hpp"

namespace fockspace::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "fockctl";
inline constexpr const char* kToolVersion = "0.1.0";

/// Rounds to 12 significant digits; the JSON writer then emits at most 12.
/// Non-finite values become the strings "inf", "-inf" or "nan".
Json number(double value);
Json complex_number(Complex z);
std::string format_sig12(double value);

Json divisor_echo(const Divisor& divisor);
Json to_json(const GeometryVerdicts& verdicts, std::size_t max_listed_points);
Json to_json(const SpectralSummary& summary);
Json to_json(std::span<const RingSchedule> rings);

/// Skeleton shared by every report: tool, version, command, input echo.
Json report_header(const std::string& command, Json input);

/// Fixed two-space indentation and trailing newline.
std::string dump(const Json& report);

/// CSV with header N,smin,smax,ratio.
std::string spectral_csv(std::span<const SpectralSummary> rows);
/// CSV with header re,im.
std::string points_csv(std::span<const Complex> points);

}  // namespace fockspace::cli
