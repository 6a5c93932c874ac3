#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace prodex {

/// Exact integer used for every coefficient, exponent and ghost value.
using Integer = mpz_class;

/// Parses a decimal integer with optional leading sign. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Parses a comma-separated list such as "1,-1,-2". Whitespace around items is ignored.
std::vector<Integer> parse_integer_list(std::string_view text);

inline std::string to_decimal(const Integer &value) { return value.get_str(10); }

/// base^exp with exp a machine word.
Integer power(const Integer &base, std::uint64_t exp);

} // namespace prodex
