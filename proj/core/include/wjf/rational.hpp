#pragma once

#include <gmpxx.h>

#include <string>

namespace wjf {

// Exact rational scalar. Arithmetic through mpq_class keeps values canonical
// (lowest terms, positive denominator); anything constructed from raw text
// must go through parse_rational, which canonicalizes and validates.
using Rational = mpq_class;

// Accepts "p" or "p/q" with optional leading '-'. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Renders as "p" or "p/q" in lowest terms.
std::string rational_str(const Rational& x);

}  // namespace wjf
