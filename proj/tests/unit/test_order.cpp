#include <gtest/gtest.h>

#include "flagweak/genfun.hpp"
#include "flagweak/order.hpp"
#include "support.hpp"

using namespace flagweak;
using flagweak::test::B;
using flagweak::test::S;
using L = GeneratorLabel;

namespace {

std::vector<std::pair<std::string, std::string>> cover_list(const std::vector<Cover>& cs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : cs) out.emplace_back(c.label.to_string(), S(c.element));
  return out;
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

}  // namespace

TEST(Covers, Up) {
  EXPECT_EQ(cover_list(up_covers(B(2, "1,2"))), (Pairs{{"b1", "-1,2"}, {"b2", "1,-2"}}));
  EXPECT_EQ(cover_list(up_covers(B(2, "1,-2"))), (Pairs{{"a1", "2,1"}, {"b1", "-1,-2"}}));
  EXPECT_TRUE(up_covers(mu0(GroupContext(2, 2))).empty());
  EXPECT_TRUE(up_covers(mu0(GroupContext(3, 3))).empty());
}

TEST(Covers, Down) {
  EXPECT_EQ(cover_list(down_covers(B(2, "-2,-1"))), (Pairs{{"b1", "2,-1"}, {"b2", "-2,1"}}));
  EXPECT_TRUE(down_covers(identity(GroupContext(2, 2))).empty());
  EXPECT_EQ(cover_list(down_covers(B(2, "2,1"))), (Pairs{{"a1", "1,-2"}}));
}

TEST(Covers, DownInvertsUp) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : enumerate(GroupContext(r, n))) {
        for (const auto& [s, x] : down_covers(g)) {
          ASSERT_EQ(right_multiply(x, s), g);
          const auto ups = up_covers(x);
          ASSERT_TRUE(std::any_of(ups.begin(), ups.end(), [&](const Cover& c) { return c.element == g; }));
        }
        for (const auto& [s, y] : up_covers(g)) {
          ASSERT_EQ(finv(y), finv(g) + 1);
          const auto downs = down_covers(y);
          ASSERT_TRUE(std::any_of(downs.begin(), downs.end(), [&](const Cover& c) { return c.element == g; }));
        }
        ASSERT_EQ(wdes(g), static_cast<int>(down_covers(g).size()));
      }
}

TEST(Covers, AAndNextBExclusive) {
  for (int r = 2; r <= 4; ++r)
    for (const auto& g : enumerate(GroupContext(r, 3))) {
      const auto cs = up_covers(g);
      auto has = [&](L s) { return std::any_of(cs.begin(), cs.end(), [s](const Cover& c) { return c.label == s; }); };
      for (int i = 1; i < 3; ++i) ASSERT_FALSE(has(L::a(i)) && has(L::b(i + 1)));
    }
}

TEST(MSets, Examples) {
  const std::vector<std::pair<int, int>> a{{1, 6}, {1, 4}, {2, 3}, {4, 6}};
  EXPECT_EQ(m_set(a), (std::set<int>{3, 4, 6}));
  EXPECT_TRUE(m_set({}).empty());
  EXPECT_EQ(m_between(std::vector<int>{1, 2}, std::vector<int>{2, 1}), (std::set<int>{2}));
  EXPECT_TRUE(m_between(std::vector<int>{2, 1}, std::vector<int>{1, 2}).empty());
}

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(B(2, "-1,2"), B(2, "-2,-1")));
  EXPECT_FALSE(leq(B(2, "-1,2"), B(2, "1,-2")));
  EXPECT_FALSE(leq(B(2, "1,-2"), B(2, "-1,2")));
  for (const auto& g : enumerate(GroupContext(3, 2))) EXPECT_TRUE(leq(g, g));
  EXPECT_THROW(leq(B(2, "1,2"), identity(GroupContext(3, 2))), ContextMismatch);
}

TEST(Leq, AgreesWithReachability) {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
    const auto hasse = build_hasse(GroupContext(r, n));
    const Reachability reach(hasse);
    for (int a = 0; a < hasse.size(); ++a)
      for (int b = 0; b < hasse.size(); ++b)
        ASSERT_EQ(leq(hasse.element(a), hasse.element(b)), reach.leq(a, b)) << "r=" << r << " n=" << n;
  }
  const auto b2 = build_hasse(GroupContext(2, 2));
  for (const auto& g : b2.elements())
    for (const auto& h : b2.elements()) ASSERT_EQ(leq(g, h), leq_oracle(g, h, b2));
}

TEST(Leq, SelfDual) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) {
      const auto all = enumerate(GroupContext(r, n));
      for (const auto& g : all)
        for (const auto& h : all) ASSERT_EQ(leq(g, h), leq(dual(h), dual(g)));
    }
}

TEST(Hasse, B2) {
  const auto h = build_hasse(GroupContext(2, 2));
  EXPECT_EQ(h.size(), 8);
  EXPECT_EQ(h.edges().size(), 10u);
  EXPECT_EQ(h.rank_sizes(), (std::vector<std::int64_t>{1, 2, 2, 2, 1}));
  EXPECT_EQ(S(h.element(h.bottom())), "1,2");
  EXPECT_EQ(S(h.element(h.top())), "-2,-1");
  for (const auto& e : h.edges()) {
    EXPECT_EQ(h.finv(e.to), h.finv(e.from) + 1);
    EXPECT_EQ(right_multiply(h.element(e.from), e.label), h.element(e.to));
  }
}

TEST(Hasse, B3RankSizes) {
  const auto h = build_hasse(GroupContext(2, 3));
  EXPECT_EQ(h.size(), 48);
  EXPECT_EQ(h.edges().size(), 96u);
  EXPECT_EQ(h.rank_sizes(), (std::vector<std::int64_t>{1, 3, 5, 7, 8, 8, 7, 5, 3, 1}));
}

TEST(Hasse, RankSizesSymmetricUnimodal) {
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 3; ++n) {
      const auto sizes = build_hasse(GroupContext(r, n)).rank_sizes();
      const auto m = sizes.size();
      for (std::size_t k = 0; k < m; ++k) ASSERT_EQ(sizes[k], sizes[m - 1 - k]);
      for (std::size_t k = 0; k + 1 < (m + 1) / 2; ++k) ASSERT_LE(sizes[k], sizes[k + 1]);
    }
}

TEST(Interval, Construction) {
  const auto single = build_interval(B(2, "1,-2"), B(2, "1,-2"));
  EXPECT_EQ(single.size(), 1);
  EXPECT_TRUE(single.edges().empty());
  EXPECT_THROW(build_interval(B(2, "-1,2"), B(2, "1,-2")), NotComparable);

  const auto full = build_hasse(GroupContext(2, 3));
  const Reachability reach(full);
  for (int a = 0; a < full.size(); a += 5)
    for (int b = 0; b < full.size(); ++b) {
      if (!reach.leq(a, b)) continue;
      const auto direct = build_interval(full.element(a), full.element(b));
      const auto swept = interval_from_hasse(full, full.element(a), full.element(b));
      ASSERT_EQ(direct.size(), swept.size());
      ASSERT_EQ(direct.edges().size(), swept.edges().size());
      for (int i = 0; i < direct.size(); ++i) {
        ASSERT_EQ(direct.element(i), swept.element(i));
        ASSERT_TRUE(leq(full.element(a), direct.element(i)) && leq(direct.element(i), full.element(b)));
      }
    }
}

TEST(RankGenfun, MatchesProduct) {
  EXPECT_EQ(rank_genfun(build_hasse(GroupContext(2, 2))).to_string(), "1 + 2*q + 2*q^2 + 2*q^3 + q^4");
  EXPECT_EQ(rank_genfun(build_hasse(GroupContext(1, 1))).to_string(), "1");
  EXPECT_EQ(rank_genfun(build_hasse(GroupContext(3, 1))).to_string(), "1 + q + q^2");
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(rank_genfun(build_hasse(GroupContext(r, n))), prod_q_int(r, n));
}

TEST(Wdes, SignedFormula) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : enumerate(GroupContext(2, n))) ASSERT_EQ(wdes(g), wdes_signed_formula(g)) << S(g);
  EXPECT_THROW(wdes_signed_formula(identity(GroupContext(3, 2))), std::invalid_argument);
}
