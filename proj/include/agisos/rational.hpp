#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace agisos {

using BigInt = mpz_class;
/// Always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Accepts "p" or "p/q" with optional sign. Throws Error(InvalidArgument).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

BigInt floor(const Rational& r);

/// r - floor(r), in [0, 1).
Rational fractional_part(const Rational& r);

}  // namespace agisos
