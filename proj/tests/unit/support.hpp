#pragma once

#include <string>
#include <vector>

#include "flagweak/core.hpp"
#include "flagweak/io.hpp"

namespace flagweak::test {

// Element of B_n from signed or overlined notation.
inline ColoredPermutation B(int n, const std::string& text) { return parse_element(GroupContext(2, n), text); }

inline ColoredPermutation G(int r, int n, const std::string& text) { return parse_element(GroupContext(r, n), text); }

inline std::string S(const ColoredPermutation& g) { return format_element(g, Notation::Signed); }

inline std::vector<std::string> strings(const std::vector<ColoredPermutation>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(S(x));
  return out;
}

}  // namespace flagweak::test
