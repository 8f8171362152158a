#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qnve {

/// Exact rational. mpq_class keeps numerator/denominator coprime with a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "n" or "n/m" with an optional leading sign; the result is canonical.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" when the denominator is 1, otherwise "n/m".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

/// |q| as a double; used only for numeric diagnostics.
double to_double(const Rational& q);

}  // namespace qnve
