#include "flagweak/order.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace flagweak {

namespace {

bool covers_via(const ColoredPermutation& x, GeneratorLabel s) {
  const int r = x.context().r();
  if (s.is_b()) return x.color(s.index) != r - 1;
  return x.color(s.index + 1) == r - 1 && x.value(s.index) < x.value(s.index + 1);
}

// Walks up from `start` along covers, keeping elements accepted by `keep`.
template <typename Keep>
HasseDiagram explore(const ColoredPermutation& start, const ColoredPermutation& top, Keep keep) {
  const auto& ctx = start.context();
  std::vector<ColoredPermutation> elements{start};
  std::unordered_map<ColoredPermutation, int> seen{{start, 0}};
  std::vector<CoverEdge> edges;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    const ColoredPermutation x = elements[head];
    for (auto& [label, y] : up_covers(x)) {
      if (!keep(y)) continue;
      auto [it, inserted] = seen.try_emplace(y, static_cast<int>(elements.size()));
      if (inserted) {
        if (elements.size() >= ctx.cap())
          throw CapExceeded("diagram exceeds the element cap of " + std::to_string(ctx.cap()));
        elements.push_back(y);
      }
      edges.push_back({static_cast<int>(head), it->second, label});
    }
  }
  return HasseDiagram::assemble(ctx, std::move(elements), edges, start, top);
}

}  // namespace

std::vector<Cover> up_covers(const ColoredPermutation& g) {
  std::vector<Cover> out;
  for (const auto& s : generators(g.context()))
    if (covers_via(g, s)) out.push_back({s, right_multiply(g, s)});
  std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.label < b.label; });
  return out;
}

std::vector<Cover> down_covers(const ColoredPermutation& g) {
  const auto& ctx = g.context();
  std::vector<Cover> out;
  for (const auto& s : generators(ctx)) {
    auto x = compose(g, inverse(generator(ctx, s)));
    if (covers_via(x, s)) out.push_back({s, std::move(x)});
  }
  std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.label < b.label; });
  return out;
}

int wdes(const ColoredPermutation& g) { return static_cast<int>(down_covers(g).size()); }

int wdes_signed_formula(const ColoredPermutation& g) {
  if (g.context().r() != 2) throw std::invalid_argument("wdes_signed_formula needs r = 2");
  std::set<int> positions;
  for (int d : perm::descents(g.permutation())) positions.insert(d);
  for (int i = 1; i <= g.size(); ++i)
    if (g.color(i) == 1) positions.insert(i);
  return static_cast<int>(positions.size());
}

std::set<int> m_set(std::span<const std::pair<int, int>> pairs) {
  std::set<int> out;
  for (const auto& [i, j] : pairs) out.insert(j);
  return out;
}

namespace detail {

std::uint32_t larger_values(std::uint64_t pair_mask, int n) {
  std::uint32_t out = 0;
  for (int b = 2; b <= n; ++b) {
    const std::uint64_t row = ((std::uint64_t{1} << (b - 1)) - 1) << perm::pair_bit(1, b);
    if (pair_mask & row) out |= 1u << (b - 1);
  }
  return out;
}

std::uint32_t m_between_mask(std::uint64_t inv_u, std::uint64_t inv_v, int n) {
  return larger_values(inv_v & ~inv_u, n);
}

}  // namespace detail

std::set<int> m_between(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size()) throw std::invalid_argument("m_between: permutations of different size");
  const int n = static_cast<int>(u.size());
  const auto mask =
      detail::m_between_mask(perm::inverse_inversion_mask(u), perm::inverse_inversion_mask(v), n);
  std::set<int> out;
  for (int j = 1; j <= n; ++j)
    if (mask >> (j - 1) & 1u) out.insert(j);
  return out;
}

bool leq(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (!(g.context() == h.context())) throw ContextMismatch("leq: elements of different groups");
  const int n = g.size();
  const auto inv_g = perm::inverse_inversion_mask(g.permutation());
  const auto inv_h = perm::inverse_inversion_mask(h.permutation());
  if (inv_g & ~inv_h) return false;
  const auto m = detail::m_between_mask(inv_g, inv_h, n);
  const auto cg = value_colors(g);
  const auto ch = value_colors(h);
  for (int j = 1; j <= n; ++j)
    if (cg[j - 1] > ch[j - 1] && !(m >> (j - 1) & 1u)) return false;
  return true;
}

HasseDiagram HasseDiagram::assemble(const GroupContext& ctx, std::vector<ColoredPermutation> elements,
                                    const std::vector<CoverEdge>& raw_edges,
                                    const ColoredPermutation& bottom, const ColoredPermutation& top) {
  const int count = static_cast<int>(elements.size());
  std::vector<std::int64_t> ranks(count);
  for (int i = 0; i < count; ++i) ranks[i] = flagweak::finv(elements[i]);

  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return elements[a] < elements[b];
  });
  std::vector<int> new_id(count);
  for (int i = 0; i < count; ++i) new_id[order[i]] = i;

  HasseDiagram d(ctx);
  d.elements_.reserve(count);
  d.finv_.reserve(count);
  for (int i = 0; i < count; ++i) {
    d.elements_.push_back(std::move(elements[order[i]]));
    d.finv_.push_back(ranks[order[i]]);
  }
  d.edges_.reserve(raw_edges.size());
  for (const auto& e : raw_edges) d.edges_.push_back({new_id[e.from], new_id[e.to], e.label});
  std::sort(d.edges_.begin(), d.edges_.end(), [](const CoverEdge& a, const CoverEdge& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  d.edges_.erase(std::unique(d.edges_.begin(), d.edges_.end(),
                             [](const CoverEdge& a, const CoverEdge& b) {
                               return a.from == b.from && a.to == b.to && a.label == b.label;
                             }),
                 d.edges_.end());

  d.up_.assign(count, {});
  d.down_.assign(count, {});
  for (int e = 0; e < static_cast<int>(d.edges_.size()); ++e) {
    d.up_[d.edges_[e].from].push_back(e);
    d.down_[d.edges_[e].to].push_back(e);
  }
  d.index_.reserve(count);
  for (int i = 0; i < count; ++i) d.index_.emplace(d.elements_[i], i);
  d.bottom_ = d.id(bottom);
  d.top_ = d.id(top);
  return d;
}

std::optional<int> HasseDiagram::find(const ColoredPermutation& g) const {
  const auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int HasseDiagram::id(const ColoredPermutation& g) const {
  const auto it = index_.find(g);
  if (it == index_.end()) throw std::out_of_range("element is not in the diagram");
  return it->second;
}

std::vector<std::int64_t> HasseDiagram::rank_sizes() const {
  std::vector<std::int64_t> sizes;
  for (int i = 0; i < size(); ++i) {
    const auto k = static_cast<std::size_t>(rank(i));
    if (sizes.size() <= k) sizes.resize(k + 1, 0);
    ++sizes[k];
  }
  return sizes;
}

HasseDiagram build_hasse(const GroupContext& ctx) {
  return explore(identity(ctx), mu0(ctx), [](const ColoredPermutation&) { return true; });
}

Interval build_interval(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (!leq(g, h)) throw NotComparable("interval needs bottom <= top");
  return explore(g, h, [&h](const ColoredPermutation& x) { return leq(x, h); });
}

Interval interval_from_hasse(const HasseDiagram& hasse, const ColoredPermutation& g,
                             const ColoredPermutation& h) {
  const int lo = hasse.id(g);
  const int hi = hasse.id(h);
  const int count = hasse.size();

  auto sweep = [&](int start, bool upward) {
    std::vector<char> mark(count, 0);
    std::deque<int> queue{start};
    mark[start] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int e : upward ? hasse.up_edges(x) : hasse.down_edges(x)) {
        const int y = upward ? hasse.edges()[e].to : hasse.edges()[e].from;
        if (!mark[y]) {
          mark[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return mark;
  };
  const auto above = sweep(lo, true);
  const auto below = sweep(hi, false);
  if (!above[hi]) throw NotComparable("interval needs bottom <= top");

  std::vector<int> local(count, -1);
  std::vector<ColoredPermutation> elements;
  for (int i = 0; i < count; ++i) {
    if (above[i] && below[i]) {
      local[i] = static_cast<int>(elements.size());
      elements.push_back(hasse.element(i));
    }
  }
  std::vector<CoverEdge> edges;
  for (const auto& e : hasse.edges())
    if (local[e.from] >= 0 && local[e.to] >= 0) edges.push_back({local[e.from], local[e.to], e.label});
  return HasseDiagram::assemble(hasse.context(), std::move(elements), edges, g, h);
}

UniPoly rank_genfun(const HasseDiagram& hasse) {
  return UniPoly(hasse.rank_sizes(), 'q');
}

bool leq_oracle(const ColoredPermutation& g, const ColoredPermutation& h, const HasseDiagram& hasse) {
  const int from = hasse.id(g);
  const int to = hasse.id(h);
  std::vector<char> mark(hasse.size(), 0);
  std::deque<int> queue{from};
  mark[from] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == to) return true;
    for (int e : hasse.up_edges(x)) {
      const int y = hasse.edges()[e].to;
      if (!mark[y]) {
        mark[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return false;
}

Reachability::Reachability(const HasseDiagram& hasse)
    : hasse_(&hasse), words_((hasse.size() + 63) / 64) {
  const int count = hasse.size();
  up_.assign(count, std::vector<std::uint64_t>(words_, 0));
  down_.assign(count, std::vector<std::uint64_t>(words_, 0));
  // Ids are sorted by rank and every edge goes up one rank, so descending ids
  // see all successors first.
  for (int a = count - 1; a >= 0; --a) {
    auto& bits = up_[a];
    bits[a >> 6] |= std::uint64_t{1} << (a & 63);
    for (int e : hasse.up_edges(a)) {
      const auto& above = up_[hasse.edges()[e].to];
      for (int w = 0; w < words_; ++w) bits[w] |= above[w];
    }
  }
  for (int a = 0; a < count; ++a) {
    auto& bits = down_[a];
    bits[a >> 6] |= std::uint64_t{1} << (a & 63);
    for (int e : hasse.down_edges(a)) {
      const auto& below = down_[hasse.edges()[e].from];
      for (int w = 0; w < words_; ++w) bits[w] |= below[w];
    }
  }
}

}  // namespace flagweak
