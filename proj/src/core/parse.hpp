// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#pragma once

#include <string_view>

#include "nilhecke.hpp"
#include "poly.hpp"
#include "superpoly.hpp"

namespace exnil {

// Grammar (whitespace ignored):
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' digits]
//   atom   := digits ['/' digits] | 'x' digits | 'w' digits | 'd' digits
//           | 'd[' digits* ']' | '(' expr ')'
// Products are taken in the extended nilHecke algebra, so w's anticommute and
// d's do not commute past x's or w's. Indices must lie in 1..n (d: 1..n-1).

/// Any element of the extended nilHecke algebra.
NHElem parse_nh(int n, std::string_view text);
/// Expression without d's; throws ParseError otherwise.
SuperPoly parse_superpoly(int n, std::string_view text);
/// Expression without w's or d's; throws ParseError otherwise.
Poly parse_poly(int n, std::string_view text);

/// The d-free part of e as an extended polynomial; throws ParseError if e has d-terms.
SuperPoly to_superpoly(const NHElem& e);

}  // namespace exnil
