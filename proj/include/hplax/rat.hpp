#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hplax {

/// Exact rational in lowest terms with positive denominator.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rat make_rat(const BigInt& num, const BigInt& den = 1);

/// Parses "p", "-p" or "p/q" (whitespace not allowed). Result is canonical.
/// Throws std::invalid_argument on malformed text or zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical text: "p/q", or bare "p" when the denominator is one.
std::string to_string(const Rat& value);

inline Rat abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

inline bool is_zero(const Rat& value) { return sgn(value) == 0; }

}  // namespace hplax
