#pragma once

// Element strings.
//
//   general form   "2^1,1^0,3^2"   value^color, comma separated, any r
//   plain values   "2,1,3"          all colors 0
//   signed (r=2)   "-2,1,3"         a minus sign marks color 1
//   compact        "213"            digits only, n <= 9, colors 0
//   overline       "2̄13"            compact form with U+0304 marking color 1 (r=2)
//
// Printing produces the general form, or the signed form when requested
// for r = 2.

#include <stdexcept>
#include <string>
#include <string_view>

#include "flagweak/core.hpp"

namespace flagweak {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Notation { General, Signed };

ColoredPermutation parse_element(const GroupContext& ctx, std::string_view text);

/// Notation::Signed falls back to the general form when r != 2.
std::string format_element(const ColoredPermutation& g, Notation notation = Notation::General);

}  // namespace flagweak
