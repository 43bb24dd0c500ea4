#pragma once

#include <string_view>

#include "ffvojta/bipoly.hpp"

namespace ffvojta {

/// Grammar: rationals, t, X, Y, + - * / ^ and parentheses; ^ takes a
/// nonnegative integer literal. Throws ParseError (with the offset) or
/// DivisionByZeroPoly.
BiPoly parse_bipoly(std::string_view src);
/// As parse_bipoly, but X and Y are rejected.
RatFunc parse_ratfunc(std::string_view src);

}  // namespace ffvojta
