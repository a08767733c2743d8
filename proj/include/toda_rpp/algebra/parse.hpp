#pragma once

#include <string_view>

#include "toda_rpp/algebra/scalar.hpp"

namespace toda_rpp {

/// Parses expressions such as `(1-x[-1]*x[0])/(1-x[0])`, `3/4*q^-2`.
/// Grammar: sums and differences of products and quotients of powers, with
/// integer literals, variables `name` or `name[int]`, and parentheses.
/// Throws ParseError with the offending position.
Scalar parse_scalar(std::string_view text);

}  // namespace toda_rpp
