#pragma once

// The flag weak order on G(r,n): covers, the comparison criterion, Hasse
// diagrams and intervals, and a reachability oracle built from cover edges.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagweak/core.hpp"
#include "flagweak/poly.hpp"

namespace flagweak {

struct Cover {
  GeneratorLabel label;
  ColoredPermutation element;
};

/// Elements covering g, as (s, g*s). Sorted by label.
///   b_i  when c_i(g) != r-1
///   a_i  when c_{i+1}(g) == r-1 and |g(i)| < |g(i+1)|
std::vector<Cover> up_covers(const ColoredPermutation& g);

/// Elements covered by g, as (s, x) with x*s == g. Sorted by label.
std::vector<Cover> down_covers(const ColoredPermutation& g);

/// Number of elements covered by g.
int wdes(const ColoredPermutation& g);

/// #(D(|g|) u Neg(g)) for r = 2. Throws std::invalid_argument otherwise.
int wdes_signed_formula(const ColoredPermutation& g);

/// M(A) = { j : (i,j) in A }.
std::set<int> m_set(std::span<const std::pair<int, int>> pairs);

/// M[Inv(v^{-1}) \ Inv(u^{-1})] for permutations u, v in S_n (no containment
/// required).
std::set<int> m_between(std::span<const int> u, std::span<const int> v);

namespace detail {
/// Bit (j-1) set for every larger value j of a pair in the mask.
std::uint32_t larger_values(std::uint64_t pair_mask, int n);
std::uint32_t m_between_mask(std::uint64_t inv_u, std::uint64_t inv_v, int n);
}  // namespace detail

/// g <= h in the flag weak order, evaluated directly from the windows:
/// Inv(|g^-1|) within Inv(|h^-1|), and every value whose color drops from g to h
/// lies in M(|g|,|h|).
bool leq(const ColoredPermutation& g, const ColoredPermutation& h);

struct CoverEdge {
  int from;
  int to;
  GeneratorLabel label;
};

// Rank-layered element store with labeled cover edges. Elements are sorted by
// (finv, lexicographic window); ids are positions in that order. An Interval is
// the same structure restricted to [bottom, top].
class HasseDiagram {
 public:
  const GroupContext& context() const noexcept { return ctx_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  std::span<const ColoredPermutation> elements() const noexcept { return elements_; }
  std::span<const CoverEdge> edges() const noexcept { return edges_; }
  const ColoredPermutation& element(int id) const { return elements_.at(id); }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }

  std::optional<int> find(const ColoredPermutation& g) const;
  /// Throws std::out_of_range when g is not in the diagram.
  int id(const ColoredPermutation& g) const;

  std::int64_t finv(int id) const { return finv_.at(id); }
  /// Rank relative to the bottom element.
  int rank(int id) const { return static_cast<int>(finv_.at(id) - finv_[bottom_]); }
  std::vector<std::int64_t> rank_sizes() const;

  /// Edge indices leaving / entering an element.
  std::span<const int> up_edges(int id) const { return up_.at(id); }
  std::span<const int> down_edges(int id) const { return down_.at(id); }

  /// Builds a diagram from an element set closed under the covers it lists.
  /// `raw_edges` refer to positions in `elements`.
  static HasseDiagram assemble(const GroupContext& ctx, std::vector<ColoredPermutation> elements,
                               const std::vector<CoverEdge>& raw_edges, const ColoredPermutation& bottom,
                               const ColoredPermutation& top);

 private:
  explicit HasseDiagram(const GroupContext& ctx) : ctx_(ctx) {}

  GroupContext ctx_;
  std::vector<ColoredPermutation> elements_;
  std::vector<std::int64_t> finv_;
  std::vector<CoverEdge> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::unordered_map<ColoredPermutation, int> index_;
  int bottom_ = 0;
  int top_ = 0;
};

using Interval = HasseDiagram;

/// The whole poset, built rank by rank from the identity.
HasseDiagram build_hasse(const GroupContext& ctx);

/// [g, h] by walking up from g and keeping elements x with leq(x, h).
/// Throws NotComparable unless g <= h, CapExceeded past ctx.cap() elements.
Interval build_interval(const ColoredPermutation& g, const ColoredPermutation& h);

/// [g, h] as the up-set of g intersected with the down-set of h inside a
/// prebuilt diagram.
Interval interval_from_hasse(const HasseDiagram& hasse, const ColoredPermutation& g,
                             const ColoredPermutation& h);

/// Sum of q^(rank) over the diagram, ranks measured from the bottom.
UniPoly rank_genfun(const HasseDiagram& hasse);

/// h reachable from g along cover edges of `hasse`.
bool leq_oracle(const ColoredPermutation& g, const ColoredPermutation& h, const HasseDiagram& hasse);

/// Transitive closure of the cover edges as dense bitsets, for bulk oracle
/// queries (every pair of a small group).
class Reachability {
 public:
  explicit Reachability(const HasseDiagram& hasse);

  const HasseDiagram& diagram() const noexcept { return *hasse_; }
  bool leq(int a, int b) const { return test(up_[a], b); }

  /// Ids above (resp. below) a, including a itself.
  const std::vector<std::uint64_t>& up_set(int a) const { return up_[a]; }
  const std::vector<std::uint64_t>& down_set(int a) const { return down_[a]; }
  int words() const noexcept { return words_; }

  static bool test(const std::vector<std::uint64_t>& bits, int i) {
    return (bits[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

 private:
  const HasseDiagram* hasse_;
  int words_;
  std::vector<std::vector<std::uint64_t>> up_;
  std::vector<std::vector<std::uint64_t>> down_;
};

}  // namespace flagweak
