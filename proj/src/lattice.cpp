#include "flagweak/lattice.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace flagweak {

namespace {

// Breadth-first walk over S_n by adjacent swaps. Moving up adds the value pair
// (p[i], p[i+1]) to Inv(p^-1); moving down removes it. `allowed` filters masks.
template <typename Allowed>
std::vector<int> weak_order_extremum(std::vector<int> start, bool upward, Allowed allowed) {
  const auto n = start.size();
  std::unordered_set<std::uint64_t> seen{perm::inverse_inversion_mask(start)};
  std::deque<std::vector<int>> queue{start};
  std::vector<int> best = start;
  std::uint64_t best_mask = perm::inverse_inversion_mask(start);
  std::vector<std::uint64_t> masks{best_mask};

  while (!queue.empty()) {
    auto p = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if ((p[i] < p[i + 1]) != upward) continue;
      auto q = p;
      std::swap(q[i], q[i + 1]);
      const auto mask = perm::inverse_inversion_mask(q);
      if (!allowed(mask) || !seen.insert(mask).second) continue;
      masks.push_back(mask);
      const bool better = upward ? std::popcount(mask) > std::popcount(best_mask)
                                 : std::popcount(mask) < std::popcount(best_mask);
      if (better) {
        best = q;
        best_mask = mask;
      }
      queue.push_back(std::move(q));
    }
  }
  for (auto m : masks) {
    const bool inside = upward ? (m & ~best_mask) == 0 : (best_mask & ~m) == 0;
    if (!inside) throw std::logic_error("weak order extremum is not unique");
  }
  return best;
}

void require_same(const GroupContext& ctx, std::span<const ColoredPermutation> elements) {
  for (const auto& g : elements)
    if (!(g.context() == ctx)) throw ContextMismatch("lattice operation on elements of different groups");
}

std::vector<std::uint64_t> intersect(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  std::vector<std::uint64_t> out(a.size());
  for (std::size_t w = 0; w < a.size(); ++w) out[w] = a[w] & b[w];
  return out;
}

bool contains_all(const std::vector<std::uint64_t>& big, const std::vector<std::uint64_t>& small) {
  for (std::size_t w = 0; w < big.size(); ++w)
    if (small[w] & ~big[w]) return false;
  return true;
}

// Extremal element of a bitset of ids: highest id for meets, lowest for joins.
// Ids are rank-sorted, so that element has extremal rank.
std::optional<int> pick(const std::vector<std::uint64_t>& bits, bool highest) {
  const int words = static_cast<int>(bits.size());
  if (highest) {
    for (int w = words - 1; w >= 0; --w)
      if (bits[w]) return w * 64 + 63 - std::countl_zero(bits[w]);
  } else {
    for (int w = 0; w < words; ++w)
      if (bits[w]) return w * 64 + std::countr_zero(bits[w]);
  }
  return std::nullopt;
}

}  // namespace

std::vector<int> sn_weak_meet(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size()) throw std::invalid_argument("sn_weak_meet: sizes differ");
  const auto common = perm::inverse_inversion_mask(u) & perm::inverse_inversion_mask(v);
  std::vector<int> e(u.size());
  std::iota(e.begin(), e.end(), 1);
  return weak_order_extremum(e, true, [common](std::uint64_t m) { return (m & ~common) == 0; });
}

std::vector<int> sn_weak_join(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size()) throw std::invalid_argument("sn_weak_join: sizes differ");
  const auto both = perm::inverse_inversion_mask(u) | perm::inverse_inversion_mask(v);
  std::vector<int> w0(u.size());
  std::iota(w0.rbegin(), w0.rend(), 1);
  return weak_order_extremum(w0, false, [both](std::uint64_t m) { return (both & ~m) == 0; });
}

ColoredPermutation meet_set(const GroupContext& ctx, std::span<const ColoredPermutation> elements) {
  require_same(ctx, elements);
  if (elements.empty()) return mu0(ctx);
  const int n = ctx.n();

  auto base = elements.front().permutation();
  for (const auto& g : elements.subspan(1)) base = sn_weak_meet(base, g.permutation());
  const auto inv_base = perm::inverse_inversion_mask(base);

  std::vector<int> colors(n, ctx.r() - 1);
  for (const auto& g : elements) {
    const auto m = detail::m_between_mask(inv_base, perm::inverse_inversion_mask(g.permutation()), n);
    const auto vc = value_colors(g);
    for (int j = 1; j <= n; ++j)
      if (!(m >> (j - 1) & 1u)) colors[j - 1] = std::min(colors[j - 1], vc[j - 1]);
  }
  return from_value_colors(ctx, base, colors);
}

ColoredPermutation join_set(const GroupContext& ctx, std::span<const ColoredPermutation> elements) {
  require_same(ctx, elements);
  if (elements.empty()) return identity(ctx);
  const int n = ctx.n();

  auto base = elements.front().permutation();
  for (const auto& g : elements.subspan(1)) base = sn_weak_join(base, g.permutation());
  const auto inv_base = perm::inverse_inversion_mask(base);

  std::vector<int> colors(n, 0);
  for (const auto& g : elements) {
    const auto m = detail::m_between_mask(perm::inverse_inversion_mask(g.permutation()), inv_base, n);
    const auto vc = value_colors(g);
    for (int j = 1; j <= n; ++j)
      if (!(m >> (j - 1) & 1u)) colors[j - 1] = std::max(colors[j - 1], vc[j - 1]);
  }
  return from_value_colors(ctx, base, colors);
}

ColoredPermutation meet(const ColoredPermutation& g, const ColoredPermutation& h) {
  const std::array pair{g, h};
  return meet_set(g.context(), pair);
}

ColoredPermutation join(const ColoredPermutation& g, const ColoredPermutation& h) {
  const std::array pair{g, h};
  return join_set(g.context(), pair);
}

std::optional<int> meet_oracle(const Reachability& reach, int a, int b) {
  const auto common = intersect(reach.down_set(a), reach.down_set(b));
  const auto best = pick(common, true);
  if (!best || !contains_all(reach.down_set(*best), common)) return std::nullopt;
  return best;
}

std::optional<int> join_oracle(const Reachability& reach, int a, int b) {
  const auto common = intersect(reach.up_set(a), reach.up_set(b));
  const auto best = pick(common, false);
  if (!best || !contains_all(reach.up_set(*best), common)) return std::nullopt;
  return best;
}

namespace {

// Ids reachable from `start` following edges up (or down).
std::vector<std::uint64_t> reach_from(const HasseDiagram& hasse, int start, bool upward) {
  std::vector<std::uint64_t> bits((hasse.size() + 63) / 64, 0);
  std::deque<int> queue{start};
  bits[start >> 6] |= std::uint64_t{1} << (start & 63);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int e : upward ? hasse.up_edges(x) : hasse.down_edges(x)) {
      const int y = upward ? hasse.edges()[e].to : hasse.edges()[e].from;
      if (!Reachability::test(bits, y)) {
        bits[y >> 6] |= std::uint64_t{1} << (y & 63);
        queue.push_back(y);
      }
    }
  }
  return bits;
}

std::optional<ColoredPermutation> bound_oracle(const ColoredPermutation& g, const ColoredPermutation& h,
                                               const HasseDiagram& hasse, bool lower) {
  const auto common = intersect(reach_from(hasse, hasse.id(g), !lower), reach_from(hasse, hasse.id(h), !lower));
  const auto best = pick(common, lower);
  if (!best || !contains_all(reach_from(hasse, *best, !lower), common)) return std::nullopt;
  return hasse.element(*best);
}

}  // namespace

std::optional<ColoredPermutation> meet_oracle(const ColoredPermutation& g, const ColoredPermutation& h,
                                              const HasseDiagram& hasse) {
  return bound_oracle(g, h, hasse, true);
}

std::optional<ColoredPermutation> join_oracle(const ColoredPermutation& g, const ColoredPermutation& h,
                                              const HasseDiagram& hasse) {
  return bound_oracle(g, h, hasse, false);
}

std::vector<ColoredPermutation> atoms(const Interval& interval) {
  std::vector<ColoredPermutation> out;
  for (int e : interval.up_edges(interval.bottom())) out.push_back(interval.element(interval.edges()[e].to));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColoredPermutation> atoms_below(const ColoredPermutation& g, const ColoredPermutation& h) {
  std::vector<ColoredPermutation> out;
  for (auto& c : up_covers(g))
    if (leq(c.element, h)) out.push_back(std::move(c.element));
  return out;
}

int mobius(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (!leq(g, h)) throw NotComparable("mobius(g, h) needs g <= h");
  if (g == h) return 1;
  // If h is a join of atoms of [g, mu0] at all, it is the join of every atom below it.
  const auto below = atoms_below(g, h);
  if (below.empty() || join_set(g.context(), below) != h) return 0;
  return below.size() % 2 == 0 ? 1 : -1;
}

HomotopyClass classify_homotopy(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (!leq(g, h)) throw NotComparable("classify_homotopy(g, h) needs g <= h");
  HomotopyClass out;
  if (finv(h) - finv(g) < 2) return out;
  const auto below = atoms_below(g, h);
  out.atoms = static_cast<int>(below.size());
  out.kind = join_set(g.context(), below) == h ? HomotopyClass::Kind::Sphere : HomotopyClass::Kind::Contractible;
  return out;
}

std::string HomotopyClass::to_string() const {
  switch (kind) {
    case Kind::Sphere:
      return "S^" + std::to_string(sphere_dimension());
    case Kind::Contractible:
      return "contractible";
    case Kind::NotApplicable:
      break;
  }
  return "n/a";
}

std::vector<std::int64_t> mobius_row(const Reachability& reach, int from) {
  const int count = reach.diagram().size();
  std::vector<std::int64_t> mu(count, 0);
  const auto& above = reach.up_set(from);
  mu[from] = 1;
  for (int x = from + 1; x < count; ++x) {
    if (!Reachability::test(above, x)) continue;
    const auto& below = reach.down_set(x);
    std::int64_t sum = 0;
    for (int y = from; y < x; ++y)
      if (Reachability::test(above, y) && Reachability::test(below, y)) sum += mu[y];
    mu[x] = -sum;
  }
  return mu;
}

int mobius_oracle(const ColoredPermutation& g, const ColoredPermutation& h, const HasseDiagram& hasse) {
  const auto interval = interval_from_hasse(hasse, g, h);
  const Reachability reach(interval);
  return static_cast<int>(mobius_row(reach, interval.bottom())[interval.top()]);
}

}  // namespace flagweak
