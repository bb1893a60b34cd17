#pragma once

// Relation checks for the presentations of B_n, B_n^+ and G(r,n) in the
// concrete colored-permutation model, plus orders of generated subgroups.

#include <cstdint>
#include <string>
#include <vector>

#include "flagweak/core.hpp"

namespace flagweak {

inline constexpr std::uint64_t kClosureCap = 1'000'000;

struct RelationFailure {
  std::string relation;
  std::vector<int> indices;
  std::string lhs;  // evaluated sides, in element notation
  std::string rhs;
};

struct RelationFamily {
  std::string id;
  std::string statement;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
};

struct RelationReport {
  std::vector<RelationFamily> families;
  std::vector<RelationFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// B1_r  b_i^r = 1
/// B2    b_i b_j = b_j b_i
/// B3    a_i^2 = b_i b_{i+1}
/// B4    a_i a_j = a_j a_i                  |i-j| > 1
/// B5    a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}
/// B6    a_i b_j = b_j a_i                  j != i, i+1
/// B7    a_i b_i = b_{i+1} a_i
/// B8    a_i b_{i+1} = b_i a_i
RelationReport verify_relations_B(const GroupContext& ctx);

/// For the generators a_i of B_n (r = 2):
/// A0    a_i = s_i b_i, with s_i the transposition (i,i+1)
/// A1    a_i^4 = 1
/// A2    a_i a_j = a_j a_i                  |i-j| > 1
/// A3    a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}
/// A4    (a_i a_{i+1})^3 = 1
RelationReport verify_relations_A(int n);

struct DerivationStep {
  std::string expression;
  ColoredPermutation value;
};

/// Evaluates each expression of the chain (a_i a_{i+1})^3 = ... = 1 in B_n.
/// Throws std::invalid_argument unless 1 <= i <= n-2.
std::vector<DerivationStep> remark_derivation(int n, int i);

/// Every step of remark_derivation(n, i) is the identity.
bool verify_remark_derivation(int n, int i);
/// ... for every i in 1..n-2. Throws std::invalid_argument for n < 3.
bool verify_remark_derivation(int n);

/// Order of the subgroup generated by `gens`, by breadth-first closure.
/// Throws CapExceeded past `cap` elements.
std::uint64_t closure_order(const GroupContext& ctx, const std::vector<ColoredPermutation>& gens,
                            std::uint64_t cap = kClosureCap);

/// The generators a_1..a_{n-1} (resp. all of S_{r,n}) as elements.
std::vector<ColoredPermutation> a_generators(const GroupContext& ctx);
std::vector<ColoredPermutation> all_generators(const GroupContext& ctx);

}  // namespace flagweak
