#pragma once

#include <string_view>

#include "arbor/bipoly.hpp"
#include "arbor/unipoly.hpp"

namespace arbor {

/// Parses expressions such as "(1/12)(2u+1)(u+1)^3" or "-V^6E^4 + 2V^6E^3".
/// Supports + - * ^, parentheses, integer literals, division by a constant
/// and implicit multiplication. Variable names are single letters.
/// Throws std::invalid_argument on syntax errors or unknown variables.
BiPoly parse_bipoly(std::string_view text, char a, char b);
UniPoly parse_unipoly(std::string_view text, char var);

}  // namespace arbor
