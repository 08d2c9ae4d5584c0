#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace gpfree::cli {

using Json = nlohmann::json;

/// Rounded to 12 significant digits for machine output.
double num(long double value);

Json envelope(const std::string& command, Json params, Json results, Json error_bounds);

/// `key,value` rows for a results object; nested keys joined with '.'.
std::string flatten_csv(const Json& results);

/// Writes to `path` when given, else to `out`.
void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out);

}  // namespace gpfree::cli
