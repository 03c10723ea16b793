#pragma once

#include <string>

#include "wjf/series.hpp"

namespace wjf {

// Human-readable expansion, one q-slice per line:
//
//   (z^-1 w^-1 + z^-1 + w^-1 - 6 + z + w + z w) q^0 +
//   (...) q^1 + ...
//
// Elliptic exponents print in half-integer form ("z^-3/2"); the q-exponent is
// the reduced fraction n/24. Within a slice terms are ordered by total
// elliptic degree, then outward from the diagonal, z before w. The zero
// series renders as "0".
std::string render_text(const JacobiSeries& f);

// Bit-exact JSON: weight (or weight2 when the doubled weight is odd), rank,
// index as {"m2"} or the triple {"a","b","c"}, prec24, and the sorted term
// list with rational coefficients as "p/q" strings.
std::string to_json(const JacobiSeries& f);

// Inverse of to_json. Rejects text that is not valid JSON, lacks required
// fields, carries both "weight" and "weight2", mismatches rank and index
// shape, or repeats a term. Throws std::invalid_argument.
JacobiSeries series_from_json(const std::string& text);

}  // namespace wjf
