#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fockspace/geometry.hpp"
#include "fockspace/numerics.hpp"

namespace fockspace::cli {

struct IngestedDivisor {
  Divisor divisor;
  std::vector<std::string> warnings;
};

/// Parses {"alpha": a, "points": [{"re": x, "im": y, "mult": m}, ...]}.
/// Coincident points are merged with a warning. Throws SchemaError naming the
/// offending line or field.
IngestedDivisor parse_divisor(std::string_view text);
IngestedDivisor read_divisor_file(const std::string& path);

/// Shortest round-trip decimal for coordinates, so parse(serialize(X)) == X.
std::string serialize_divisor(const Divisor& divisor);

/// Parses {"values": [{"re": x, "im": y}, ...]} in measurement-label order.
MeasurementVector parse_values(std::string_view text, const Divisor& divisor);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fockspace::cli
