#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace cubic27 {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Accepts "n" or "n/d" with optional sign.
Rational parse_rational(std::string_view s);

std::size_t hash_value(const Rational& q);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace cubic27
