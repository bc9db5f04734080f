#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace residua {

// Every quantity that can grow with the input (coefficients, degrees, Milnor
// numbers, Euler characteristics) is carried as an unbounded integer.
using Integer = mpz_class;

// Parses an optionally signed decimal integer. Throws InvalidInput naming
// `field` on anything else (no whitespace, no leading '+' followed by sign).
Integer parse_integer(std::string_view text, std::string_view field = "value");

// Comma separated list of decimal integers; an empty string is the empty list.
std::vector<Integer> parse_integer_list(std::string_view text, std::string_view field = "value");

// Narrowing for small structural parameters (dimensions, ranks, indices).
int to_int(const Integer& value, std::string_view field = "value");

inline std::string to_string(const Integer& value) { return value.get_str(); }

std::string join(const std::vector<Integer>& values, std::string_view sep = ",");

Integer binomial(int n, int k);

// (-1)^e as an integer.
inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace residua
