#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hcube {

// Exact rational; gmpxx keeps results of arithmetic in canonical form.
using Rational = mpq_class;

/// 2^e for any integer e.
Rational pow2(long e);

/// Parses "num/den" or an integer string. Decimal points, exponents and
/// zero denominators are rejected with ErrorCode::ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Fixed-point decimal rendering, rounded half away from zero. Used only for
/// presentation (SVG coordinates), never fed back into computation.
std::string to_decimal(const Rational& r, int digits);

/// True iff r == 2^k for some integer k, which is stored in `exponent`.
bool exact_log2(const Rational& r, long& exponent);

}  // namespace hcube
