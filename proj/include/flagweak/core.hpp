#pragma once

// Colored permutations: the wreath product G(r,n) = Z_r wr S_n.
//
// An element is stored as its window: position i holds the pair
// (|pi(i)|, c_i). Colors are least nonnegative residues mod r. The product
// follows the "colors before permutation" convention
//
//   ((c, s) * (d, t))_i = (s(t(i)), c_{t(i)} + d_i),
//
// which for r = 2 is ordinary composition of signed permutations.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagweak {

inline constexpr int kMaxLetters = 11;
inline constexpr std::uint64_t kDefaultElementCap = 10'000'000;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an operation needs g <= h and the pair is not comparable.
class NotComparable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// r^n * n!, or nullopt if it does not fit in 64 bits.
std::optional<std::uint64_t> group_order(int r, int n);

class GroupContext {
 public:
  /// Throws std::invalid_argument for r < 1, n < 1 or n > kMaxLetters, and
  /// CapExceeded when r^n * n! is larger than `cap`.
  GroupContext(int r, int n, std::uint64_t cap = kDefaultElementCap);

  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t cap() const noexcept { return cap_; }

  friend bool operator==(const GroupContext& a, const GroupContext& b) noexcept {
    return a.r_ == b.r_ && a.n_ == b.n_;
  }

 private:
  int r_;
  int n_;
  std::uint64_t order_;
  std::uint64_t cap_;
};

struct Letter {
  int value;  // |pi(i)|, in 1..n
  int color;  // c_i, in 0..r-1

  friend bool operator==(const Letter&, const Letter&) = default;
};

class ColoredPermutation {
 public:
  /// Validates that the values form a permutation of 1..n and every color
  /// lies in 0..r-1; throws std::invalid_argument otherwise.
  ColoredPermutation(const GroupContext& ctx, std::span<const Letter> window);

  const GroupContext& context() const noexcept { return ctx_; }
  int size() const noexcept { return ctx_.n(); }
  std::span<const Letter> window() const noexcept {
    return {window_.data(), static_cast<std::size_t>(ctx_.n())};
  }

  // Positions are 1-based throughout the public API.
  int value(int position) const { return window_[position - 1].value; }
  int color(int position) const { return window_[position - 1].color; }

  /// The underlying permutation |pi| in one-line notation.
  std::vector<int> permutation() const;

  friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) noexcept;

  /// Lexicographic on the value sequence, then on the color sequence.
  friend std::strong_ordering operator<=>(const ColoredPermutation& a,
                                          const ColoredPermutation& b) noexcept;

 private:
  GroupContext ctx_;
  std::array<Letter, kMaxLetters> window_{};
};

struct GeneratorLabel {
  enum class Kind : std::uint8_t { A, B };

  Kind kind;
  int index;

  static GeneratorLabel a(int i) { return {Kind::A, i}; }
  static GeneratorLabel b(int i) { return {Kind::B, i}; }

  bool is_a() const noexcept { return kind == Kind::A; }
  bool is_b() const noexcept { return kind == Kind::B; }

  /// "a1", "b3", ...
  std::string to_string() const;

  friend auto operator<=>(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// Parses "a<i>" / "b<i>". Throws std::invalid_argument.
GeneratorLabel parse_generator(std::string_view text);

/// The generating set S_{r,n}: a_1..a_{n-1} followed by b_1..b_n.
std::vector<GeneratorLabel> generators(const GroupContext& ctx);

struct PermStats {
  std::vector<std::pair<int, int>> inv_set;  // position pairs (i,j), i<j, |pi(i)|>|pi(j)|
  int inv = 0;
  std::vector<int> descent_set;              // descents of |pi|
  std::int64_t color_sum = 0;
  std::int64_t finv = 0;
};

ColoredPermutation identity(const GroupContext& ctx);
ColoredPermutation compose(const ColoredPermutation& g, const ColoredPermutation& h);
ColoredPermutation inverse(const ColoredPermutation& g);

/// Throws std::out_of_range when the index does not fit the kind.
ColoredPermutation generator(const GroupContext& ctx, GeneratorLabel label);

/// g * s without materializing s. Equal to compose(g, generator(ctx, s)).
ColoredPermutation right_multiply(const ColoredPermutation& g, GeneratorLabel label);

/// Evaluates the word s_1 s_2 ... s_k (identity for the empty word).
ColoredPermutation evaluate(const GroupContext& ctx, std::span<const GeneratorLabel> word);

ColoredPermutation mu0(const GroupContext& ctx);
ColoredPermutation bar(const ColoredPermutation& g);
ColoredPermutation dual(const ColoredPermutation& g);

std::int64_t finv(const ColoredPermutation& g);
PermStats stats(const ColoredPermutation& g);

/// Position of g in enumerate(ctx); a dense id in [0, order).
std::uint64_t index_of(const ColoredPermutation& g);
ColoredPermutation element_at(const GroupContext& ctx, std::uint64_t index);

/// Every element once, lexicographic on (values, colors). Throws CapExceeded
/// if the order is above ctx.cap().
std::vector<ColoredPermutation> enumerate(const GroupContext& ctx);

/// Entry j-1 is the color carried by the value j, i.e. -c_j(g^{-1}).
std::vector<int> value_colors(const ColoredPermutation& g);

/// Inverse of value_colors: the element with |g| = perm whose value j carries
/// color value_colors[j-1].
ColoredPermutation from_value_colors(const GroupContext& ctx, std::span<const int> perm,
                                     std::span<const int> value_colors);

// Symmetric-group helpers. Permutations are one-line, values 1..n.
namespace perm {

/// Bit index of the value pair (a, b), a < b.
constexpr int pair_bit(int a, int b) noexcept { return (b - 1) * (b - 2) / 2 + (a - 1); }

/// Inv(p^{-1}) as a bitmask over value pairs (a,b), a<b, with b left of a in p.
std::uint64_t inverse_inversion_mask(std::span<const int> p);

int inversions(std::span<const int> p);
std::vector<int> descents(std::span<const int> p);
std::vector<int> inverse(std::span<const int> p);
bool is_permutation(std::span<const int> p);

/// All of S_n in lexicographic order.
std::vector<std::vector<int>> all(int n);

}  // namespace perm

}  // namespace flagweak

template <>
struct std::hash<flagweak::ColoredPermutation> {
  std::size_t operator()(const flagweak::ColoredPermutation& g) const noexcept;
};
