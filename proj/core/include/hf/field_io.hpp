#pragma once

#include <string>

#include "hf/field.hpp"

namespace hf {

// Canonical text form. Finite extension fields print as polynomials in t,
// highest degree first ("t^2+2*t+1"); prime fields print the residue;
// the rationals print "num/den" in lowest terms or a plain integer.
// The point at infinity prints as "inf".
std::string format_elem(const FieldElem& a);
std::string format_p1(const P1Point& a);

// Accepts the canonical form plus the obvious relaxations: whitespace,
// unary minus, "2t" for "2*t", leading '+'. Throws parse_error.
FieldElem parse_elem(const std::string& text, const FieldPtr& field);
P1Point parse_p1(const std::string& text, const FieldPtr& field);

// "q" | "Q" | "0" -> the rationals, "p" -> GF(p), "p^k" -> GF(p^k).
FieldPtr parse_field_spec(const std::string& spec);
std::string format_field_spec(const Field& f);

}  // namespace hf
