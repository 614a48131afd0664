#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace zariski {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal digits, q > 0 after normalization).
/// Floating point notation is rejected; exactness is part of the contract.
Rat parse_rational(const std::string& text);

/// Renders a rational in canonical form: bare integer when the denominator
/// is 1, reduced "p/q" otherwise.
std::string to_string(const Rat& value);

std::string to_string(const Int& value);

inline bool is_integral(const Rat& value) { return value.get_den() == 1; }

/// Least common multiple of the reduced denominators; 1 for the empty span.
Int denominator_lcm(std::span<const Rat> values);

}  // namespace zariski
