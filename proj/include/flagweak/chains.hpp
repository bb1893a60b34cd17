#pragma once

// Maximal chains of intervals as generator words, pseudo-Coxeter moves between
// them, and the chain graph Gamma with connectivity and diameter.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagweak/core.hpp"
#include "flagweak/order.hpp"

namespace flagweak {

inline constexpr std::uint64_t kDefaultChainCap = 1'000'000;
inline constexpr std::size_t kExactDiameterLimit = 100'000;

/// A maximal chain base < base*s1 < base*s1*s2 < ... written as its letters.
struct GeneratorWord {
  ColoredPermutation base;
  std::vector<GeneratorLabel> letters;

  /// "b1 b2 a1 b1"; empty word prints as "e".
  std::string to_string() const;
  ColoredPermutation end() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Every prefix raises finv by exactly one per letter.
bool is_valid_chain(const GeneratorWord& word);

/// Parses "b1 b2 a1" (separators: spaces, '*', '.' or U+00B7).
std::vector<GeneratorLabel> parse_word(std::string_view text);

/// All maximal chains of the interval, lexicographic in their letters.
/// Throws CapExceeded when there are more than `cap`.
std::vector<GeneratorWord> maximal_chains(const Interval& interval, std::uint64_t cap = kDefaultChainCap);

/// Number of maximal chains, counted without enumerating them.
std::uint64_t count_maximal_chains(const Interval& interval);

/// Letters of the chain starting with s in [g, g*s v g*s'] of B_n; independent
/// of g. nullopt for {a_i, b_{i+1}}, which never cover the same element.
/// Throws std::invalid_argument when s == s'.
std::optional<std::vector<GeneratorLabel>> alpha(GeneratorLabel s, GeneratorLabel t);

/// alpha(s, t) based at g. Throws std::invalid_argument unless r = 2 and both
/// g*s and g*t cover g.
GeneratorWord alpha_word(const ColoredPermutation& g, GeneratorLabel s, GeneratorLabel t);

enum class MoveKind { T1, T2, T3, T4, T5, Generic };
std::string to_string(MoveKind kind);

struct Move {
  int position;  // 1-based index of the first replaced letter
  GeneratorWord word;
  MoveKind kind;
};

/// One-factor rewrites by T1-T5. Throws std::invalid_argument unless r = 2.
///   T1  b_i b_j <-> b_j b_i
///   T2  a_i b_j <-> b_j a_i                      j != i, i+1
///   T3  a_i b_{i+1} <-> b_i a_i
///   T4  a_i a_j <-> a_j a_i                      |i-j| > 1
///   T5  a_i a_{i+1} b_{i+1} a_i <-> a_{i+1} b_{i+1} a_i a_{i+1}
std::vector<Move> tits_moves(const GeneratorWord& word);

/// Two-atom reroutes for any r: at prefix x with next letter s, for each other
/// cover letter t of x, if the word passes through y = x*s v x*t, replace the
/// segment from x to y by each maximal chain of [x, y] that starts with t.
std::vector<Move> generic_moves(const GeneratorWord& word);

enum class MoveSet { Auto, Tits, Generic };

struct ChainGraph {
  struct Edge {
    int u;
    int v;
    MoveKind kind;
  };

  std::vector<GeneratorWord> vertices;
  std::vector<Edge> edges;  // u < v, one per adjacent pair
  std::vector<std::vector<int>> adjacency;
  bool empirical = false;  // built from generic moves
};

/// Gamma of the interval. MoveSet::Auto uses T1-T5 for r = 2 and generic moves
/// otherwise. Throws CapExceeded past `cap` chains.
ChainGraph gamma_graph(const Interval& interval, MoveSet moves = MoveSet::Auto,
                       std::uint64_t cap = kDefaultChainCap);

bool is_connected(const ChainGraph& graph);

struct DiameterResult {
  int value = 0;
  bool exact = true;
  bool connected = true;
};

/// Exact diameter by BFS from every vertex (spread over `jobs` threads) up to
/// `exact_limit` vertices; beyond that a double-sweep lower bound.
DiameterResult diameter(const ChainGraph& graph, int jobs = 1, std::size_t exact_limit = kExactDiameterLimit);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const ChainGraph& graph, int source);

}  // namespace flagweak
