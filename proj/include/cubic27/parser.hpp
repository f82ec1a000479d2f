#pragma once

#include <string_view>

#include "cubic27/ratfunc.hpp"

namespace cubic27 {

// Grammar: integers, the field generator, variables x y z t b c d e f, + - * / ^ and parentheses.
// Juxtaposition multiplies ("2xy", "3(c+e)"). Exponents are non-negative integers.
RatFunc<NfElem> parse_ratfunc(std::string_view text, FieldRef field);
NfPoly parse_nfpoly(std::string_view text, FieldRef field);
QPoly parse_qpoly(std::string_view text);
NfElem parse_nfelem(std::string_view text, FieldRef field);

QPoly to_qpoly(const NfPoly& p);
NfPoly to_nfpoly(const QPoly& p, FieldRef field);

}  // namespace cubic27
