#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ringlab {

using Integer = mpz_class;

/// Parses an optionally signed decimal integer. Throws SyntaxError.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& v) { return v.get_str(); }

/// Deterministic primality by trial division; inputs are desk-scale.
bool is_prime(std::uint64_t n);

}  // namespace ringlab
