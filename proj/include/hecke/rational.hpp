#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hecke {

/// Exact rational scalar used for every coefficient in the library.
using Rational = mpq_class;

/// Canonical decimal-free rendering: "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q = 0.
Rational parse_rational(std::string_view text);

}  // namespace hecke
