#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "nerkit/error.hpp"

namespace nerkit {

// Exact nonnegative rational with a power-of-ten denominator, parsed from
// decimal text. Split fractions and vocabulary coverage go through this type
// so that floor(0.3 * 500) is 150 and ceil(0.95 * 20) is 19 — binary doubles
// get both wrong.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Fraction parse(std::string_view text) {
    if (text.empty()) throw ConfigError("empty fraction");
    std::uint64_t n = 0;
    std::uint64_t d = 1;
    bool seen_digit = false;
    bool seen_point = false;
    int digits = 0;
    for (char c : text) {
      if (c == '.') {
        if (seen_point) throw ConfigError("bad fraction: " + std::string(text));
        seen_point = true;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ConfigError("bad fraction: " + std::string(text));
      if (++digits > 18) throw ConfigError("fraction too precise: " + std::string(text));
      n = n * 10 + static_cast<std::uint64_t>(c - '0');
      if (seen_point) d *= 10;
      seen_digit = true;
    }
    if (!seen_digit) throw ConfigError("bad fraction: " + std::string(text));
    return Fraction{n, d};
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::uint64_t floor_mul(std::uint64_t n) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(n) * num) / den);
  }

  std::uint64_t ceil_mul(std::uint64_t n) const {
    const unsigned __int128 p = static_cast<unsigned __int128>(n) * num;
    return static_cast<std::uint64_t>((p + den - 1) / den);
  }

  // Canonical decimal rendering: "0.8", "1.0", "0.95".
  std::string str() const {
    std::uint64_t ip = num / den;
    std::uint64_t rem = num % den;
    std::string out = std::to_string(ip);
    out.push_back('.');
    if (rem == 0) {
      out.push_back('0');
      return out;
    }
    std::string frac;
    for (std::uint64_t d = den / 10; d >= 1; d /= 10) {
      frac.push_back(static_cast<char>('0' + rem / d));
      rem %= d;
      if (d == 1) break;
    }
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out += frac;
    return out;
  }

  bool operator==(const Fraction& o) const {
    return static_cast<unsigned __int128>(num) * o.den ==
           static_cast<unsigned __int128>(o.num) * den;
  }
};

}  // namespace nerkit
