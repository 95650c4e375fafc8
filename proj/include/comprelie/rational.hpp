#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace comprelie {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// `p` or `p/q`, q > 0, reduced.
std::string to_string(const Rational& r);

/// Accepts `p`, `-p`, `p/q`; the result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace comprelie
