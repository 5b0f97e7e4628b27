#pragma once

// Input file schemas. Rationals are always JSON strings ("a/b" or "a");
// JSON numbers in a rational slot are rejected. Violations raise
// ParseError carrying the offending path, e.g. "pairs[2].y".

#include <string_view>
#include <utility>
#include <vector>

#include "urset/polyring.hpp"
#include "urset/subspace.hpp"

namespace urset::io {

/// {"coeffs": ["c0", "c1", ...]}, constant term first.
poly::RatPoly parse_poly(std::string_view text);

/// [{"x": "a/b", "y": "c/d"}, ...]
std::vector<std::pair<qs::Rational, qs::Rational>> parse_pairs(std::string_view text);

/// {"r": 1, "forms": [["1","0"], ["0","1"], ["1","1"]]}
sub::LinearFormSystem parse_forms(std::string_view text);

/// [["81","-80"], ["5","-4"]]
std::vector<std::vector<qs::Rational>> parse_points(std::string_view text);

/// Rational from a command-line flag; `flag` names it in errors.
qs::Rational parse_rational_arg(std::string_view text, std::string_view flag);

}  // namespace urset::io
