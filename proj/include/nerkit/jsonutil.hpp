#pragma once

#include <string>

#include <json.hpp>

#include "nerkit/error.hpp"
#include "nerkit/rational.hpp"

namespace nerkit {

// Fractions in config files are decimal strings ("0.8") or JSON numbers.
// Numbers go through their shortest round-trip decimal rendering before
// exact parsing, so 0.3 means 3/10, not the nearest binary double.
inline Fraction fraction_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Fraction::parse(j.get<std::string>());
  if (j.is_number()) return Fraction::parse(j.dump());
  throw ConfigError("expected a fraction (string or number), got " + j.dump());
}

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DataError("malformed JSON in " + what);
  return j;
}

}  // namespace nerkit
