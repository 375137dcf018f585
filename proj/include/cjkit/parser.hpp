#pragma once

#include <cstddef>
#include <string_view>

#include "cjkit/formula.hpp"

namespace cjkit {

// Surface syntax, tightest binding first:
//
//   unary:  ~ [] <> [a] <a> Oa Oi      (prefix, right-nested)
//           O(B|A)  viol(A)  true  false  identifiers  ( ... )
//   &, |, -> (right-associative), <-> (left-associative)
//
// Inside O(...) the first unparenthesized | separates consequent from
// antecedent. Throws SyntaxError or UnknownToken on malformed input.
Formula parse_formula(std::string_view text);

// Parses a leading formula and reports how much of the text it consumed;
// used by line formats that put keywords after a formula.
Formula parse_formula_prefix(std::string_view text, std::size_t& consumed);

}  // namespace cjkit
