#pragma once

#include <string_view>

#include "explog/parse_error.hpp"
#include "explog/symbolic.hpp"

namespace explog {

/// Reads a constant in display notation back into the ring.
///
/// Accepts integers, + - * /, ^ with integer exponents, parentheses or
/// brackets, and the names gamma, log(mu), log(2), log(4), sqrt(pi),
/// zeta(k). Two display conveniences are understood as well: `delta`
/// stands for gamma + log(mu), and `pi^m` with even m for (6*zeta(2))^(m/2). Odd powers
/// of pi have no representation and are rejected. Division is only allowed
/// by a nonzero rational.
SymbolicConstant parse_constant(std::string_view text);

}  // namespace explog
