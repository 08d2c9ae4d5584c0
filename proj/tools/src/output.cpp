#include "output.hpp"

#include <fstream>

#include "gpfree/errors.hpp"
#include "gpfree/format.hpp"

#ifndef GPFREE_VERSION
#define GPFREE_VERSION "0.0.0"
#endif

namespace gpfree::cli {

double num(long double value) { return round_significant(static_cast<double>(value), 12); }

Json envelope(const std::string& command, Json params, Json results, Json error_bounds) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  j["error_bounds"] = error_bounds.is_null() ? Json::object() : std::move(error_bounds);
  j["version"] = GPFREE_VERSION;
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return format_significant(v.get<double>(), 12);
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::string& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
  } else {
    std::string text = scalar_text(v);
    if (text.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      text = quoted + "\"";
    }
    out += prefix + "," + text + "\n";
  }
}

}  // namespace

std::string flatten_csv(const Json& results) {
  std::string out = "key,value\n";
  flatten(results, "", out);
  return out;
}

void emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kDomainError, "cannot write " + *path);
  file << text;
}

}  // namespace gpfree::cli
