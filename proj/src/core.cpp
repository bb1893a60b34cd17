#include "flagweak/core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace flagweak {

namespace {

int mod(std::int64_t x, int r) {
  const auto m = static_cast<int>(x % r);
  return m < 0 ? m + r : m;
}

using Buffer = std::array<Letter, kMaxLetters>;

void require_same(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (!(g.context() == h.context()))
    throw ContextMismatch("elements belong to different groups G(r,n)");
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t color_space(const GroupContext& ctx) {
  std::uint64_t p = 1;
  for (int i = 0; i < ctx.n(); ++i) p *= static_cast<std::uint64_t>(ctx.r());
  return p;
}

}  // namespace

std::optional<std::uint64_t> group_order(int r, int n) {
  if (r < 1 || n < 1) return std::nullopt;
  std::uint64_t acc = 1;
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(r), &acc)) return std::nullopt;
  }
  for (int i = 2; i <= n; ++i) {
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(i), &acc)) return std::nullopt;
  }
  return acc;
}

GroupContext::GroupContext(int r, int n, std::uint64_t cap) : r_(r), n_(n), order_(0), cap_(cap) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > kMaxLetters)
    throw std::invalid_argument("n must be at most " + std::to_string(kMaxLetters));
  const auto order = group_order(r, n);
  if (!order || *order > cap) {
    throw CapExceeded("G(" + std::to_string(r) + "," + std::to_string(n) +
                      ") has more than " + std::to_string(cap) + " elements");
  }
  order_ = *order;
}

ColoredPermutation::ColoredPermutation(const GroupContext& ctx, std::span<const Letter> window)
    : ctx_(ctx) {
  const int n = ctx.n();
  if (static_cast<int>(window.size()) != n)
    throw std::invalid_argument("window has " + std::to_string(window.size()) +
                                " entries, expected " + std::to_string(n));
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const Letter l = window[i];
    if (l.value < 1 || l.value > n || (seen >> l.value & 1u))
      throw std::invalid_argument("values do not form a permutation of 1.." + std::to_string(n));
    if (l.color < 0 || l.color >= ctx.r())
      throw std::invalid_argument("color " + std::to_string(l.color) + " out of range for r = " +
                                  std::to_string(ctx.r()));
    seen |= 1u << l.value;
    window_[i] = l;
  }
}

std::vector<int> ColoredPermutation::permutation() const {
  std::vector<int> p(size());
  for (int i = 0; i < size(); ++i) p[i] = window_[i].value;
  return p;
}

bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) noexcept {
  if (!(a.ctx_ == b.ctx_)) return false;
  return std::equal(a.window_.begin(), a.window_.begin() + a.size(), b.window_.begin());
}

std::strong_ordering operator<=>(const ColoredPermutation& a, const ColoredPermutation& b) noexcept {
  if (auto c = a.ctx_.r() <=> b.ctx_.r(); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (int i = 0; i < a.size(); ++i)
    if (auto c = a.window_[i].value <=> b.window_[i].value; c != 0) return c;
  for (int i = 0; i < a.size(); ++i)
    if (auto c = a.window_[i].color <=> b.window_[i].color; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string GeneratorLabel::to_string() const {
  return (is_a() ? "a" : "b") + std::to_string(index);
}

GeneratorLabel parse_generator(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b'))
    throw std::invalid_argument("bad generator label '" + std::string(text) + "'");
  int index = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index < 1)
    throw std::invalid_argument("bad generator label '" + std::string(text) + "'");
  return {text[0] == 'a' ? GeneratorLabel::Kind::A : GeneratorLabel::Kind::B, index};
}

std::vector<GeneratorLabel> generators(const GroupContext& ctx) {
  std::vector<GeneratorLabel> out;
  for (int i = 1; i < ctx.n(); ++i) out.push_back(GeneratorLabel::a(i));
  for (int i = 1; i <= ctx.n(); ++i) out.push_back(GeneratorLabel::b(i));
  return out;
}

ColoredPermutation identity(const GroupContext& ctx) {
  Buffer w{};
  for (int i = 0; i < ctx.n(); ++i) w[i] = {i + 1, 0};
  return {ctx, std::span(w.data(), ctx.n())};
}

ColoredPermutation compose(const ColoredPermutation& g, const ColoredPermutation& h) {
  require_same(g, h);
  const auto& ctx = g.context();
  Buffer w{};
  for (int i = 1; i <= ctx.n(); ++i) {
    const int t = h.value(i);
    w[i - 1] = {g.value(t), mod(g.color(t) + h.color(i), ctx.r())};
  }
  return {ctx, std::span(w.data(), ctx.n())};
}

ColoredPermutation inverse(const ColoredPermutation& g) {
  const auto& ctx = g.context();
  Buffer w{};
  // g maps position i to value s(i); the inverse sends s(i) back to i and
  // carries -c_i there.
  for (int i = 1; i <= ctx.n(); ++i) w[g.value(i) - 1] = {i, mod(-g.color(i), ctx.r())};
  return {ctx, std::span(w.data(), ctx.n())};
}

ColoredPermutation generator(const GroupContext& ctx, GeneratorLabel label) {
  const int limit = label.is_a() ? ctx.n() - 1 : ctx.n();
  if (label.index < 1 || label.index > limit)
    throw std::out_of_range("generator " + label.to_string() + " does not exist for n = " +
                            std::to_string(ctx.n()));
  Buffer w{};
  for (int i = 0; i < ctx.n(); ++i) w[i] = {i + 1, 0};
  const int i = label.index - 1;
  if (label.is_b()) {
    w[i].color = 1 % ctx.r();
  } else {
    w[i] = {i + 2, 1 % ctx.r()};
    w[i + 1] = {i + 1, 0};
  }
  return {ctx, std::span(w.data(), ctx.n())};
}

ColoredPermutation right_multiply(const ColoredPermutation& g, GeneratorLabel label) {
  const auto& ctx = g.context();
  const int limit = label.is_a() ? ctx.n() - 1 : ctx.n();
  if (label.index < 1 || label.index > limit)
    throw std::out_of_range("generator " + label.to_string() + " does not exist for n = " +
                            std::to_string(ctx.n()));
  Buffer w{};
  std::copy(g.window().begin(), g.window().end(), w.begin());
  const int i = label.index - 1;
  if (label.is_b()) {
    w[i].color = mod(w[i].color + 1, ctx.r());
  } else {
    const Letter left = w[i];
    const Letter right = w[i + 1];
    w[i] = {right.value, mod(right.color + 1, ctx.r())};
    w[i + 1] = left;
  }
  return {ctx, std::span(w.data(), ctx.n())};
}

ColoredPermutation evaluate(const GroupContext& ctx, std::span<const GeneratorLabel> word) {
  auto g = identity(ctx);
  for (const auto& s : word) g = right_multiply(g, s);
  return g;
}

ColoredPermutation mu0(const GroupContext& ctx) {
  Buffer w{};
  for (int i = 0; i < ctx.n(); ++i) w[i] = {ctx.n() - i, ctx.r() - 1};
  return {ctx, std::span(w.data(), ctx.n())};
}

ColoredPermutation bar(const ColoredPermutation& g) {
  const auto& ctx = g.context();
  Buffer w{};
  for (int i = 1; i <= ctx.n(); ++i) w[i - 1] = {g.value(i), mod(-g.color(i), ctx.r())};
  return {ctx, std::span(w.data(), ctx.n())};
}

ColoredPermutation dual(const ColoredPermutation& g) { return compose(bar(g), mu0(g.context())); }

std::int64_t finv(const ColoredPermutation& g) {
  const auto p = g.permutation();
  std::int64_t colors = 0;
  for (int i = 1; i <= g.size(); ++i) colors += g.color(i);
  return static_cast<std::int64_t>(g.context().r()) * perm::inversions(p) + colors;
}

PermStats stats(const ColoredPermutation& g) {
  PermStats s;
  const int n = g.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.value(i) > g.value(j)) s.inv_set.emplace_back(i, j);
  s.inv = static_cast<int>(s.inv_set.size());
  s.descent_set = perm::descents(g.permutation());
  for (int i = 1; i <= n; ++i) s.color_sum += g.color(i);
  s.finv = static_cast<std::int64_t>(g.context().r()) * s.inv + s.color_sum;
  return s;
}

std::uint64_t index_of(const ColoredPermutation& g) {
  const auto& ctx = g.context();
  const int n = ctx.n();
  // Lehmer rank of |g| among S_n in lexicographic order.
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = g.value(i);
    const int smaller_unused = v - 1 - std::popcount(used & ((1u << v) - 1u));
    rank += static_cast<std::uint64_t>(smaller_unused) * factorial(n - i);
    used |= 1u << v;
  }
  std::uint64_t colors = 0;
  for (int i = 1; i <= n; ++i) colors = colors * static_cast<std::uint64_t>(ctx.r()) + g.color(i);
  return rank * color_space(ctx) + colors;
}

ColoredPermutation element_at(const GroupContext& ctx, std::uint64_t index) {
  if (index >= ctx.order()) throw std::out_of_range("element index out of range");
  const int n = ctx.n();
  const std::uint64_t space = color_space(ctx);
  std::uint64_t rank = index / space;
  std::uint64_t colors = index % space;
  Buffer w{};
  for (int i = n - 1; i >= 0; --i) {
    w[i].color = static_cast<int>(colors % static_cast<std::uint64_t>(ctx.r()));
    colors /= static_cast<std::uint64_t>(ctx.r());
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto k = static_cast<std::size_t>(rank / f);
    rank %= f;
    w[i].value = pool[k];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return {ctx, std::span(w.data(), n)};
}

std::vector<ColoredPermutation> enumerate(const GroupContext& ctx) {
  if (ctx.order() > ctx.cap())
    throw CapExceeded("enumeration of " + std::to_string(ctx.order()) + " elements exceeds cap");
  std::vector<ColoredPermutation> out;
  out.reserve(ctx.order());
  for (std::uint64_t i = 0; i < ctx.order(); ++i) out.push_back(element_at(ctx, i));
  return out;
}

std::vector<int> value_colors(const ColoredPermutation& g) {
  std::vector<int> vc(g.size());
  for (int i = 1; i <= g.size(); ++i) vc[g.value(i) - 1] = g.color(i);
  return vc;
}

ColoredPermutation from_value_colors(const GroupContext& ctx, std::span<const int> perm,
                                     std::span<const int> value_colors) {
  if (static_cast<int>(perm.size()) != ctx.n() || static_cast<int>(value_colors.size()) != ctx.n())
    throw std::invalid_argument("from_value_colors: length mismatch");
  if (!perm::is_permutation(perm)) throw std::invalid_argument("from_value_colors: not a permutation");
  Buffer w{};
  for (int i = 0; i < ctx.n(); ++i) w[i] = {perm[i], value_colors[perm[i] - 1]};
  return {ctx, std::span(w.data(), ctx.n())};
}

namespace perm {

std::uint64_t inverse_inversion_mask(std::span<const int> p) {
  std::uint64_t mask = 0;
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p[i] > p[j]) mask |= std::uint64_t{1} << pair_bit(p[j], p[i]);
  return mask;
}

int inversions(std::span<const int> p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++count;
  return count;
}

std::vector<int> descents(std::span<const int> p) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> inverse(std::span<const int> p) {
  std::vector<int> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

bool is_permutation(std::span<const int> p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::vector<int>> all(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace perm

}  // namespace flagweak

std::size_t std::hash<flagweak::ColoredPermutation>::operator()(
    const flagweak::ColoredPermutation& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.context().r()) * 1315423911u + g.size();
  for (const auto& l : g.window())
    h = h * 1000003u ^ (static_cast<std::size_t>(l.value) << 16 | static_cast<std::size_t>(l.color));
  return h;
}
