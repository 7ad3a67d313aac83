#pragma once

#include <string>
#include <string_view>

#include "ffsqfree/bipoly.hpp"

namespace ffsqfree {

/// Variables a parse may reference. `u` (the field generator) is always
/// allowed in extension fields and never in prime fields.
enum class VariableSet { T, TX };

/// Parses sums of products of integers, t, x, u, parenthesized
/// subexpressions and `^` powers. Juxtaposition multiplies ("2t", "(t+1)x").
/// Integers are reduced mod p.
BiPoly parse_poly(std::string_view text, const FieldPtr& field, VariableSet vars = VariableSet::TX);
BiPoly parse_bipoly(std::string_view text, const FieldPtr& field);
UniPoly parse_unipoly(std::string_view text, const FieldPtr& field);
FieldElem parse_element(std::string_view text, const FieldPtr& field);

/// Canonical text, descending powers: "t^3 + 2*t + 1".
std::string format(const UniPoly& f);
/// Canonical text, descending powers of x then t: "x^2 + (t+1)*x + t^3".
std::string format(const BiPoly& f);

}  // namespace ffsqfree
