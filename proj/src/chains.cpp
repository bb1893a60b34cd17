#include "flagweak/chains.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "flagweak/lattice.hpp"

namespace flagweak {

using Letters = std::vector<GeneratorLabel>;

std::string GeneratorWord::to_string() const {
  if (letters.empty()) return "e";
  std::string out;
  for (const auto& s : letters) {
    if (!out.empty()) out += ' ';
    out += s.to_string();
  }
  return out;
}

ColoredPermutation GeneratorWord::end() const {
  ColoredPermutation x = base;
  for (const auto& s : letters) x = right_multiply(x, s);
  return x;
}

bool is_valid_chain(const GeneratorWord& word) {
  const int n = word.base.size();
  ColoredPermutation x = word.base;
  auto rank = finv(x);
  for (const auto& s : word.letters) {
    if (s.index < 1 || s.index > (s.is_a() ? n - 1 : n)) return false;
    x = right_multiply(x, s);
    const auto next = finv(x);
    if (next != rank + 1) return false;
    rank = next;
  }
  return true;
}

std::vector<GeneratorLabel> parse_word(std::string_view text) {
  Letters out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '*' || c == '.' || c == ',' || c == '\t') {
      ++i;
    } else if (text.substr(i, 2) == "\xC2\xB7") {
      i += 2;
    } else if (c == 'a' || c == 'b') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      out.push_back(parse_generator(text.substr(i, j - i)));
      i = j;
    } else {
      throw std::invalid_argument("bad generator word '" + std::string(text) + "'");
    }
  }
  return out;
}

namespace {

// Up edges of each id, ordered by label so chains come out lexicographically.
std::vector<std::vector<CoverEdge>> sorted_up_edges(const Interval& interval) {
  std::vector<std::vector<CoverEdge>> up(interval.size());
  for (int x = 0; x < interval.size(); ++x) {
    for (int e : interval.up_edges(x)) up[x].push_back(interval.edges()[e]);
    std::sort(up[x].begin(), up[x].end(),
              [](const CoverEdge& a, const CoverEdge& b) { return a.label < b.label; });
  }
  return up;
}

}  // namespace

std::uint64_t count_maximal_chains(const Interval& interval) {
  std::vector<std::uint64_t> paths(interval.size(), 0);
  paths[interval.top()] = 1;
  for (int x = interval.size() - 1; x >= 0; --x)
    for (int e : interval.up_edges(x)) paths[x] = checked::add(paths[x], paths[interval.edges()[e].to]);
  return paths[interval.bottom()];
}

std::vector<GeneratorWord> maximal_chains(const Interval& interval, std::uint64_t cap) {
  const auto total = count_maximal_chains(interval);
  if (total > cap)
    throw CapExceeded("interval has " + std::to_string(total) + " maximal chains, above the cap of " +
                      std::to_string(cap));

  const auto up = sorted_up_edges(interval);
  const auto& base = interval.element(interval.bottom());
  std::vector<GeneratorWord> out;
  out.reserve(total);
  Letters letters;

  auto walk = [&](auto&& self, int x) -> void {
    if (x == interval.top()) {
      out.push_back({base, letters});
      return;
    }
    for (const auto& e : up[x]) {
      letters.push_back(e.label);
      self(self, e.to);
      letters.pop_back();
    }
  };
  walk(walk, interval.bottom());
  return out;
}

std::optional<Letters> alpha(GeneratorLabel s, GeneratorLabel t) {
  using L = GeneratorLabel;
  if (s == t) throw std::invalid_argument("alpha needs two distinct letters");
  const int i = s.index;
  const int j = t.index;
  if (s.is_b() && t.is_b()) return Letters{s, t};
  if (s.is_a() && t.is_b()) {
    if (j == i) return Letters{s, L::b(i + 1)};
    if (j == i + 1) return std::nullopt;
    return Letters{s, t};
  }
  if (s.is_b() && t.is_a()) {
    if (i == j) return Letters{s, t};
    if (i == j + 1) return std::nullopt;
    return Letters{s, t};
  }
  if (j == i + 1) return Letters{L::a(i), L::a(i + 1), L::b(i + 1), L::a(i)};
  if (i == j + 1) return Letters{L::a(i), L::b(i), L::a(j), L::a(i)};
  return Letters{s, t};
}

GeneratorWord alpha_word(const ColoredPermutation& g, GeneratorLabel s, GeneratorLabel t) {
  if (g.context().r() != 2) throw std::invalid_argument("alpha is defined for r = 2");
  auto covers = [&g](GeneratorLabel u) {
    const auto cs = up_covers(g);
    return std::any_of(cs.begin(), cs.end(), [u](const Cover& c) { return c.label == u; });
  };
  if (!covers(s) || !covers(t)) throw std::invalid_argument("alpha needs g*s and g*t to cover g");
  auto letters = alpha(s, t);
  if (!letters) throw std::invalid_argument("alpha: letters cannot cover the same element");
  return {g, std::move(*letters)};
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::T1: return "T1";
    case MoveKind::T2: return "T2";
    case MoveKind::T3: return "T3";
    case MoveKind::T4: return "T4";
    case MoveKind::T5: return "T5";
    case MoveKind::Generic: return "G";
  }
  return "?";
}

namespace {

// Replacement for a length-2 factor, with its move kind.
std::optional<std::pair<Letters, MoveKind>> rewrite_pair(GeneratorLabel x, GeneratorLabel y) {
  using L = GeneratorLabel;
  if (x.is_b() && y.is_b()) {
    if (x.index == y.index) return std::nullopt;
    return std::pair{Letters{y, x}, MoveKind::T1};
  }
  if (x.is_a() && y.is_a()) {
    if (std::abs(x.index - y.index) <= 1) return std::nullopt;
    return std::pair{Letters{y, x}, MoveKind::T4};
  }
  if (x.is_a()) {
    const int i = x.index;
    if (y.index == i + 1) return std::pair{Letters{L::b(i), x}, MoveKind::T3};
    if (y.index == i) return std::nullopt;
    return std::pair{Letters{y, x}, MoveKind::T2};
  }
  const int i = y.index;
  if (x.index == i) return std::pair{Letters{y, L::b(i + 1)}, MoveKind::T3};
  if (x.index == i + 1) return std::nullopt;
  return std::pair{Letters{y, x}, MoveKind::T2};
}

std::optional<Letters> rewrite_quad(std::span<const GeneratorLabel> f) {
  using L = GeneratorLabel;
  if (!f[0].is_a() || !f[3].is_a()) return std::nullopt;
  const int i = f[0].index;
  // a_i a_{i+1} b_{i+1} a_i
  if (f[1].is_a() && f[2].is_b() && f[1].index == i + 1 && f[2].index == i + 1 && f[3].index == i)
    return Letters{L::a(i + 1), L::b(i + 1), L::a(i), L::a(i + 1)};
  // a_{i+1} b_{i+1} a_i a_{i+1}, read with i+1 = f[0]
  if (f[1].is_b() && f[2].is_a() && i > 1 && f[1].index == i && f[2].index == i - 1 && f[3].index == i)
    return Letters{L::a(i - 1), L::a(i), L::b(i), L::a(i - 1)};
  return std::nullopt;
}

Move make_move(const GeneratorWord& word, std::size_t pos, std::span<const GeneratorLabel> replacement,
               MoveKind kind) {
  GeneratorWord out = word;
  std::copy(replacement.begin(), replacement.end(), out.letters.begin() + static_cast<std::ptrdiff_t>(pos));
  if (!is_valid_chain(out)) throw std::logic_error("move produced an invalid chain: " + out.to_string());
  return {static_cast<int>(pos) + 1, std::move(out), kind};
}

std::vector<ColoredPermutation> prefixes(const GeneratorWord& word) {
  std::vector<ColoredPermutation> out{word.base};
  for (const auto& s : word.letters) out.push_back(right_multiply(out.back(), s));
  return out;
}

// Sub-intervals [x, x*s v x*t] with their chains, shared across the words of
// one chain graph.
class RerouteTable {
 public:
  struct Entry {
    ColoredPermutation top;
    int length;
    std::vector<Letters> chains;
  };

  const Entry& get(const ColoredPermutation& x, GeneratorLabel s, GeneratorLabel t) {
    const auto key = std::tuple{index_of(x), s, t};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto y = join(right_multiply(x, s), right_multiply(x, t));
    Entry entry{y, static_cast<int>(finv(y) - finv(x)), {}};
    for (auto& w : maximal_chains(build_interval(x, y))) entry.chains.push_back(std::move(w.letters));
    return cache_.emplace(key, std::move(entry)).first->second;
  }

 private:
  std::map<std::tuple<std::uint64_t, GeneratorLabel, GeneratorLabel>, Entry> cache_;
};

std::vector<Move> generic_moves(const GeneratorWord& word, RerouteTable& table) {
  std::vector<Move> out;
  const auto xs = prefixes(word);
  const auto len = word.letters.size();
  for (std::size_t p = 0; p < len; ++p) {
    const auto& x = xs[p];
    const auto s = word.letters[p];
    for (const auto& cover : up_covers(x)) {
      const auto t = cover.label;
      if (t == s) continue;
      const auto& entry = table.get(x, s, t);
      const auto end = p + static_cast<std::size_t>(entry.length);
      if (end > len || xs[end] != entry.top) continue;
      for (const auto& chain : entry.chains)
        if (chain.front() == t) out.push_back(make_move(word, p, chain, MoveKind::Generic));
    }
  }
  return out;
}

}  // namespace

std::vector<Move> tits_moves(const GeneratorWord& word) {
  if (word.base.context().r() != 2) throw std::invalid_argument("T1-T5 moves are defined for r = 2");
  std::vector<Move> out;
  const auto& w = word.letters;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (auto r = rewrite_pair(w[p], w[p + 1])) out.push_back(make_move(word, p, r->first, r->second));
  for (std::size_t p = 0; p + 3 < w.size(); ++p)
    if (auto r = rewrite_quad(std::span(w).subspan(p, 4))) out.push_back(make_move(word, p, *r, MoveKind::T5));
  std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) {
    return std::tie(a.position, a.word.letters) < std::tie(b.position, b.word.letters);
  });
  return out;
}

std::vector<Move> generic_moves(const GeneratorWord& word) {
  RerouteTable table;
  return generic_moves(word, table);
}

ChainGraph gamma_graph(const Interval& interval, MoveSet moves, std::uint64_t cap) {
  if (moves == MoveSet::Auto) moves = interval.context().r() == 2 ? MoveSet::Tits : MoveSet::Generic;

  ChainGraph g;
  g.empirical = moves == MoveSet::Generic;
  g.vertices = maximal_chains(interval, cap);
  std::map<Letters, int> id;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) id.emplace(g.vertices[v].letters, v);

  RerouteTable table;
  std::map<std::pair<int, int>, MoveKind> found;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const auto ms = moves == MoveSet::Tits ? tits_moves(g.vertices[v]) : generic_moves(g.vertices[v], table);
    for (const auto& m : ms) {
      const auto it = id.find(m.word.letters);
      if (it == id.end()) throw std::logic_error("move left the interval: " + m.word.to_string());
      if (it->second == v) continue;
      found.try_emplace(std::minmax(v, it->second), m.kind);
    }
  }
  g.adjacency.assign(g.vertices.size(), {});
  for (const auto& [uv, kind] : found) {
    g.edges.push_back({uv.first, uv.second, kind});
    g.adjacency[uv.first].push_back(uv.second);
    g.adjacency[uv.second].push_back(uv.first);
  }
  return g;
}

std::vector<int> bfs_distances(const ChainGraph& graph, int source) {
  std::vector<int> dist(graph.vertices.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : graph.adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const ChainGraph& graph) {
  if (graph.vertices.empty()) return true;
  const auto dist = bfs_distances(graph, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DiameterResult diameter(const ChainGraph& graph, int jobs, std::size_t exact_limit) {
  DiameterResult result;
  const int count = static_cast<int>(graph.vertices.size());
  if (count == 0) return result;
  result.connected = is_connected(graph);
  if (!result.connected) {
    result.exact = false;
    result.value = -1;
    return result;
  }

  if (graph.vertices.size() > exact_limit) {
    // double sweep
    auto farthest = [&](int source) {
      const auto dist = bfs_distances(graph, source);
      const auto it = std::max_element(dist.begin(), dist.end());
      return std::pair{static_cast<int>(it - dist.begin()), *it};
    };
    const auto [u, d1] = farthest(0);
    const auto [v, d2] = farthest(u);
    result.value = std::max(d1, d2);
    result.exact = false;
    return result;
  }

  std::atomic<int> next{0};
  std::vector<int> best(std::max(1, jobs), 0);
  auto worker = [&](int slot) {
    for (int s = next++; s < count; s = next++) {
      const auto dist = bfs_distances(graph, s);
      best[slot] = std::max(best[slot], *std::max_element(dist.begin(), dist.end()));
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
  }
  result.value = *std::max_element(best.begin(), best.end());
  return result;
}

}  // namespace flagweak
