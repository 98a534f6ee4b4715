#pragma once

// Text forms.
//
//   element:    "a+b*sqrt(d)", e.g. "1+2*sqrt(-5)", "-3", "sqrt(-5)", "1-1*sqrt(-5)"
//   ideal:      "[a, b+c*sqrt(d)]", the canonical HNF basis, e.g. "[2, 1+1*sqrt(-5)]"
//   generators: "(g1, g2, ...)" or "[g1, g2, ...]" or a single bare element
//
// Printing is canonical. Parsing accepts whitespace, an optional '*', any
// number of signed terms and a bare "sqrt(d)" for coefficient one.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quadfact/quad_ideal.hpp"

namespace quadfact {

std::string to_string(const QuadInt& x);
std::string to_string(const QuadIdeal& ideal);

std::ostream& operator<<(std::ostream& os, const QuadInt& x);
std::ostream& operator<<(std::ostream& os, const QuadIdeal& ideal);

/// Parses an element of Z[sqrt(d)]. A sqrt(e) term with e != d is a
/// domain_error; coordinates above 2^40 in magnitude are a capacity_error.
QuadInt parse_element(std::string_view text, Int d = kMinusFive);

/// Parses a generator list.
std::vector<QuadInt> parse_generators(std::string_view text, Int d = kMinusFive);

}  // namespace quadfact
