#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubics/constants.hpp"
#include "cubics/tables.hpp"

namespace cubics {

enum class OutputFormat { Json, Tsv, Table };

std::optional<OutputFormat> parse_format(const std::string& s);

/// "L1".."L6", "L12".."L56", "B1".."B6" for the members of S; empty optional
/// for any other class.
std::optional<std::string> pencil_name(const DivisorClass& d);

/// Inverse of pencil_name.
std::optional<DivisorClass> parse_pencil_name(const std::string& name);

/// Seven whitespace-separated integers -> class; empty optional on bad input.
std::optional<DivisorClass> parse_divisor(const std::vector<std::string>& tokens);

std::string divisor_tokens(const DivisorClass& d);  // "2 -1 -1 -1 0 0 0"

/// Coefficients as JSON integers when they fit in 64 bits, decimal strings
/// otherwise, so emitted classes re-parse exactly.
nlohmann::ordered_json divisor_json(const DivisorClass& d);
std::optional<DivisorClass> divisor_from_json(const nlohmann::ordered_json& j);

std::string certificate_label(const Certificate& c);  // pencil name or "hyperplane-section"

}  // namespace cubics
