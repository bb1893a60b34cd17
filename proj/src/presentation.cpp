#include "flagweak/presentation.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "flagweak/io.hpp"

namespace flagweak {

namespace {

using L = GeneratorLabel;
using Word = std::vector<GeneratorLabel>;

Word power(Word w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

class Checker {
 public:
  explicit Checker(const GroupContext& ctx) : ctx_(ctx) {}

  void family(std::string id, std::string statement) {
    report_.families.push_back({std::move(id), std::move(statement), 0, 0});
  }

  void check(const ColoredPermutation& lhs, const ColoredPermutation& rhs, std::vector<int> indices) {
    auto& fam = report_.families.back();
    ++fam.instances;
    if (lhs == rhs) return;
    ++fam.failures;
    report_.failures.push_back({fam.id, std::move(indices), format_element(lhs), format_element(rhs)});
  }

  void check(const Word& lhs, const Word& rhs, std::vector<int> indices) {
    check(evaluate(ctx_, lhs), evaluate(ctx_, rhs), std::move(indices));
  }

  RelationReport take() { return std::move(report_); }

 private:
  GroupContext ctx_;
  RelationReport report_;
};

}  // namespace

RelationReport verify_relations_B(const GroupContext& ctx) {
  const int n = ctx.n();
  const int r = ctx.r();
  Checker c(ctx);

  c.family("B1_r", "b_i^" + std::to_string(r) + " = 1");
  for (int i = 1; i <= n; ++i) c.check(power({L::b(i)}, r), {}, {i});

  c.family("B2", "b_i b_j = b_j b_i");
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) c.check({L::b(i), L::b(j)}, {L::b(j), L::b(i)}, {i, j});

  c.family("B3", "a_i^2 = b_i b_{i+1}");
  for (int i = 1; i < n; ++i) c.check({L::a(i), L::a(i)}, {L::b(i), L::b(i + 1)}, {i});

  c.family("B4", "a_i a_j = a_j a_i, |i-j| > 1");
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) c.check({L::a(i), L::a(j)}, {L::a(j), L::a(i)}, {i, j});

  c.family("B5", "a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}");
  for (int i = 1; i + 1 < n; ++i)
    c.check({L::a(i), L::a(i + 1), L::a(i)}, {L::a(i + 1), L::a(i), L::a(i + 1)}, {i});

  c.family("B6", "a_i b_j = b_j a_i, j != i, i+1");
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j != i && j != i + 1) c.check({L::a(i), L::b(j)}, {L::b(j), L::a(i)}, {i, j});

  c.family("B7", "a_i b_i = b_{i+1} a_i");
  for (int i = 1; i < n; ++i) c.check({L::a(i), L::b(i)}, {L::b(i + 1), L::a(i)}, {i});

  c.family("B8", "a_i b_{i+1} = b_i a_i");
  for (int i = 1; i < n; ++i) c.check({L::a(i), L::b(i + 1)}, {L::b(i), L::a(i)}, {i});

  return c.take();
}

RelationReport verify_relations_A(int n) {
  if (n < 2) throw std::invalid_argument("verify_relations_A needs n >= 2");
  const GroupContext ctx(2, n);
  Checker c(ctx);

  c.family("A0", "a_i = (i,i+1)(i,-i)");
  for (int i = 1; i < n; ++i) {
    std::vector<Letter> w;
    for (int k = 1; k <= n; ++k) w.push_back({k, 0});
    std::swap(w[i - 1], w[i]);
    const ColoredPermutation transposition(ctx, w);
    c.check(generator(ctx, L::a(i)), compose(transposition, generator(ctx, L::b(i))), {i});
  }

  c.family("A1", "a_i^4 = 1");
  for (int i = 1; i < n; ++i) c.check(power({L::a(i)}, 4), {}, {i});

  c.family("A2", "a_i a_j = a_j a_i, |i-j| > 1");
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) c.check({L::a(i), L::a(j)}, {L::a(j), L::a(i)}, {i, j});

  c.family("A3", "a_i a_{i+1} a_i = a_{i+1} a_i a_{i+1}");
  for (int i = 1; i + 1 < n; ++i)
    c.check({L::a(i), L::a(i + 1), L::a(i)}, {L::a(i + 1), L::a(i), L::a(i + 1)}, {i});

  c.family("A4", "(a_i a_{i+1})^3 = 1");
  for (int i = 1; i + 1 < n; ++i) c.check(power({L::a(i), L::a(i + 1)}, 3), {}, {i});

  return c.take();
}

std::vector<DerivationStep> remark_derivation(int n, int i) {
  if (i < 1 || i + 2 > n) throw std::invalid_argument("remark_derivation needs 1 <= i <= n-2");
  const GroupContext ctx(2, n);
  const auto a = [](int k) { return L::a(k); };
  const auto b = [](int k) { return L::b(k); };
  const std::vector<Word> words{
      power({a(i), a(i + 1)}, 3),
      {a(i), a(i + 1), a(i), a(i + 1), a(i), a(i + 1)},
      {a(i), a(i + 1), a(i), a(i), a(i + 1), a(i)},
      {a(i), a(i + 1), b(i), b(i + 1), a(i + 1), a(i)},
      {b(i + 1), a(i), a(i + 1), a(i + 1), a(i), b(i + 2)},
      {b(i + 1), a(i), b(i + 1), b(i + 2), a(i), b(i + 2)},
      {b(i + 1), b(i), a(i), a(i), b(i + 2), b(i + 2)},
      {b(i + 1), b(i), b(i), b(i + 1), b(i + 2), b(i + 2)},
  };
  const std::vector<std::string> shown{
      "(a_i a_{i+1})^3",
      "(a_i a_{i+1} a_i)(a_{i+1} a_i a_{i+1})",
      "(a_i a_{i+1} a_i)(a_i a_{i+1} a_i)",
      "a_i a_{i+1} b_i b_{i+1} a_{i+1} a_i",
      "b_{i+1} a_i a_{i+1} a_{i+1} a_i b_{i+2}",
      "b_{i+1} a_i b_{i+1} b_{i+2} a_i b_{i+2}",
      "b_{i+1} b_i a_i a_i b_{i+2} b_{i+2}",
      "b_{i+1} b_i b_i b_{i+1} b_{i+2} b_{i+2}",
  };
  std::vector<DerivationStep> out;
  for (std::size_t k = 0; k < words.size(); ++k) out.push_back({shown[k], evaluate(ctx, words[k])});
  return out;
}

bool verify_remark_derivation(int n, int i) {
  const auto steps = remark_derivation(n, i);
  const auto e = identity(GroupContext(2, n));
  for (const auto& s : steps)
    if (s.value != e) return false;
  return true;
}

bool verify_remark_derivation(int n) {
  if (n < 3) throw std::invalid_argument("verify_remark_derivation needs n >= 3");
  for (int i = 1; i + 2 <= n; ++i)
    if (!verify_remark_derivation(n, i)) return false;
  return true;
}

std::uint64_t closure_order(const GroupContext& ctx, const std::vector<ColoredPermutation>& gens,
                            std::uint64_t cap) {
  for (const auto& g : gens)
    if (!(g.context() == ctx)) throw ContextMismatch("closure_order: generator from another group");
  const auto e = identity(ctx);
  std::unordered_set<ColoredPermutation> seen{e};
  std::deque<ColoredPermutation> queue{e};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = compose(x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("closure exceeds the cap of " + std::to_string(cap) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

std::vector<ColoredPermutation> a_generators(const GroupContext& ctx) {
  std::vector<ColoredPermutation> out;
  for (int i = 1; i < ctx.n(); ++i) out.push_back(generator(ctx, L::a(i)));
  return out;
}

std::vector<ColoredPermutation> all_generators(const GroupContext& ctx) {
  std::vector<ColoredPermutation> out;
  for (const auto& s : generators(ctx)) out.push_back(generator(ctx, s));
  return out;
}

}  // namespace flagweak
