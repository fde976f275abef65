#pragma once

#include <string_view>

#include "precint/field_tower.hpp"
#include "precint/ore.hpp"

namespace precint {

/// Parses an expression over integers, x and S with + - * / ^ and
/// parentheses. Products are taken in Q(x)[S]. A divisor must be free of S
/// and nonzero; a / f means f^{-1} a. Exponents are nonnegative integers.
/// Throws ParseError with the offending position.
OreOperator parse_operator(std::string_view text);

/// Parses an element of Q(x)[S]/<L> for an operator of order r; the
/// expression must have order below r.
QuotientElement parse_element(std::string_view text, std::size_t r);

/// Parses an S-free expression as a rational function of x.
RationalFunction parse_rational_function(std::string_view text);

/// Parses "c" for a rational literal c, or "root(p)" optionally followed by
/// "+ n" or "- n" for an integer n, with p irreducible over Q.
AlgebraicPoint parse_point(std::string_view text);

}  // namespace precint
