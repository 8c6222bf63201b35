#pragma once

#include <string>
#include <string_view>

#include "cgt/dyadic.hpp"
#include "cgt/game.hpp"

namespace cgt {

/// Shortest recognized spelling of a canonical value.
///
///   numbers        "0", "3", "-5/4"
///   nimbers        "*", "*2", "*3"
///   number + *     "2*", "-1/2*"
///   anything else  "{a,b|c}" with each side's options sorted by their text
///
/// Output depends only on the value, never on store ids.
std::string format_value(Game g);

/// Inverse of format_value. Whitespace is ignored; brace forms are
/// canonicalized, so any well-formed game text is accepted. Throws ParseError.
Game parse_value(std::string_view text);

/// Parses NUMBER := ['-'] digits ['/' power-of-two]. Throws ParseError.
Dyadic parse_dyadic(std::string_view text);

} // namespace cgt
