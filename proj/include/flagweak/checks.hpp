#pragma once

// Exhaustive oracle-agreement suites over one group, as run by `flagweak check`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flagweak/core.hpp"

namespace flagweak {

struct CheckResult {
  std::string suite;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string note;     // e.g. "empirical" for generic chain moves
  std::string witness;  // first failing case, empty on success
};

/// leq against reachability on every ordered pair, ranked edges, rank
/// generating function, self-duality, and (r = 2) the wdes set formula.
CheckResult check_order(const GroupContext& ctx, int jobs = 1);

/// Brute-force meet and join exist for every pair and match the closed forms.
CheckResult check_lattice(const GroupContext& ctx, int jobs = 1);

/// Closed-form Moebius values against the recursion on every comparable pair,
/// and homotopy tags against the Moebius values.
CheckResult check_mobius(const GroupContext& ctx, int jobs = 1);

/// Every interval has a connected chain graph; for r = 2 also the two-chain
/// intervals [g, g*s v g*t] and their alpha words.
CheckResult check_tits(const GroupContext& ctx, int jobs = 1);

/// finv, wdes and bivariate generating functions against their closed forms.
CheckResult check_genfun(const GroupContext& ctx, int jobs = 1);

/// Relation families, generated-subgroup orders and the (A4) derivation.
CheckResult check_present(const GroupContext& ctx, int jobs = 1);

/// Runs `body(i)` for i in [0, count) over `jobs` threads. `body` returns an
/// empty string on success or a witness; the witness of the smallest failing
/// index is returned.
std::string parallel_scan(std::uint64_t count, int jobs, const std::function<std::string(std::uint64_t)>& body);

}  // namespace flagweak
