#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conoff {

// GMP keeps mpq_class canonical (positive denominator, coprime parts) after
// every arithmetic operation; canonicalize() is only needed after raw set_*.
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Parses "7", "-3/2" or a plain decimal such as "0.25" / "-1.5e-1" into an
/// exact rational. Throws ParseError on malformed input or zero denominator.
BigRational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const BigRational& q);

/// Double approximation (truncated, within one ulp).
double to_double(const BigRational& q);

/// Exact rational value of a finite double.
BigRational from_double(double v);

}  // namespace conoff
