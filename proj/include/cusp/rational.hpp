#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cusp {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Values are always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// "num/den" with the denominator always printed, e.g. "-12/1", "1/2".
std::string to_string(const Rational& value);

/// Inverse of to_string; also accepts a bare integer.
Rational parse_rational(std::string_view text);

}  // namespace cusp
