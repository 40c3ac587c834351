#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nerkit/core.hpp"
#include "nerkit/error.hpp"
#include "nerkit/utf8.hpp"

namespace nerkit {

// What counts as a numeric token for automatic NUMEX annotation.
// After mapping accepted script digits to ASCII, a surface is numeric iff
// it matches  [sign]? digits [ "." digits ]? [exponent]?  with at least one
// digit, under the flags below. Deliberately narrower than a float parser:
// no "inf", no "nan", no leading ".", no exponent unless enabled.
struct NumexPolicy {
  bool allow_sign = true;
  bool allow_decimal_point = true;
  bool allow_exponent = false;
  // Codepoint of the zero digit of each accepted decimal-digit run of ten.
  std::vector<char32_t> digit_zeros = {0x0030 /* ASCII */, 0x0966 /* Devanagari */,
                                       0x09E6 /* Bengali */};
  std::vector<char32_t> thousands_separators;  // default none
};

namespace detail {

// Maps cp to its ASCII digit if it falls in an accepted digit run, else 0.
inline char digit_of(char32_t cp, const NumexPolicy& policy) {
  for (char32_t zero : policy.digit_zeros)
    if (cp >= zero && cp <= zero + 9)
      return static_cast<char>('0' + (cp - zero));
  return 0;
}

inline bool is_separator(char32_t cp, const NumexPolicy& policy) {
  for (char32_t sep : policy.thousands_separators)
    if (cp == sep) return true;
  return false;
}

// digits, with separators accepted only between two digits.
inline bool scan_digits(const std::vector<char32_t>& cps, std::size_t& i,
                        const NumexPolicy& policy) {
  std::size_t n = 0;
  while (i < cps.size()) {
    if (digit_of(cps[i], policy)) {
      ++n;
      ++i;
      continue;
    }
    if (n > 0 && is_separator(cps[i], policy) && i + 1 < cps.size() &&
        digit_of(cps[i + 1], policy)) {
      ++i;
      continue;
    }
    break;
  }
  return n > 0;
}

}  // namespace detail

inline bool is_numeric_surface(std::string_view surface, const NumexPolicy& policy) {
  const std::vector<char32_t> cps = utf8_decode(surface);
  std::size_t i = 0;
  if (policy.allow_sign && i < cps.size() && (cps[i] == U'+' || cps[i] == U'-')) ++i;
  if (!detail::scan_digits(cps, i, policy)) return false;
  if (policy.allow_decimal_point && i < cps.size() && cps[i] == U'.') {
    ++i;
    if (!detail::scan_digits(cps, i, policy)) return false;
  }
  if (policy.allow_exponent && i < cps.size() && (cps[i] == U'e' || cps[i] == U'E')) {
    ++i;
    if (policy.allow_sign && i < cps.size() && (cps[i] == U'+' || cps[i] == U'-')) ++i;
    if (!detail::scan_digits(cps, i, policy)) return false;
  }
  return i == cps.size();
}

// Tags every O token with a numeric surface as its own single-token
// B-NUMEX span. Tokens already inside a named entity are left alone, so
// the pass is idempotent and never merges adjacent numbers into one span.
inline Corpus annotate_numex(Corpus corpus, const NumexPolicy& policy = {}) {
  if (!corpus.schema.unified)
    throw DataError("annotate_numex requires a unified-schema corpus");
  for (Sentence& s : corpus.sentences)
    for (Token& t : s.tokens)
      if (t.tag.is_outside() && is_numeric_surface(t.surface, policy))
        t.tag = ChunkTag::begin(EntityType::NUMEX);
  return corpus;
}

// Policy file format:
// {"allow_sign": bool, "allow_decimal_point": bool, "allow_exponent": bool,
//  "digit_scripts": ["ascii"|"devanagari"|"bengali"|<zero codepoint>, ...],
//  "thousands_separators": "," }
inline NumexPolicy numex_policy_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("numex policy: expected a JSON object");
  NumexPolicy policy;
  for (const auto& [key, value] : j.items()) {
    if (key == "allow_sign") {
      policy.allow_sign = value.get<bool>();
    } else if (key == "allow_decimal_point") {
      policy.allow_decimal_point = value.get<bool>();
    } else if (key == "allow_exponent") {
      policy.allow_exponent = value.get<bool>();
    } else if (key == "digit_scripts") {
      policy.digit_zeros.clear();
      for (const auto& item : value) {
        if (item.is_number_unsigned()) {
          policy.digit_zeros.push_back(static_cast<char32_t>(item.get<std::uint32_t>()));
        } else if (item == "ascii") {
          policy.digit_zeros.push_back(0x0030);
        } else if (item == "devanagari") {
          policy.digit_zeros.push_back(0x0966);
        } else if (item == "bengali") {
          policy.digit_zeros.push_back(0x09E6);
        } else {
          throw ConfigError("numex policy: unknown digit script " + item.dump());
        }
      }
    } else if (key == "thousands_separators") {
      policy.thousands_separators.clear();
      for (char32_t cp : utf8_decode(value.get<std::string>()))
        policy.thousands_separators.push_back(cp);
    } else {
      throw ConfigError("numex policy: unknown key \"" + key + "\"");
    }
  }
  return policy;
}

}  // namespace nerkit
