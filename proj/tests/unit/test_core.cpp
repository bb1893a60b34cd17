#include <random>

#include <gtest/gtest.h>

#include "flagweak/core.hpp"
#include "flagweak/io.hpp"
#include "support.hpp"

using namespace flagweak;
using flagweak::test::B;
using flagweak::test::G;
using flagweak::test::S;
using L = GeneratorLabel;

TEST(GroupContext, OrderAndCap) {
  EXPECT_EQ(GroupContext(2, 3).order(), 48u);
  EXPECT_EQ(GroupContext(3, 2).order(), 18u);
  EXPECT_EQ(GroupContext(1, 3).order(), 6u);
  EXPECT_THROW(GroupContext(0, 2), std::invalid_argument);
  EXPECT_THROW(GroupContext(2, 0), std::invalid_argument);
  EXPECT_THROW(GroupContext(2, 3, 47), CapExceeded);
  EXPECT_THROW(GroupContext(10, 10), CapExceeded);
}

TEST(Parse, Notations) {
  const GroupContext b2(2, 2);
  EXPECT_EQ(parse_element(b2, "2^1,1^0"), parse_element(b2, "-2,1"));
  EXPECT_EQ(parse_element(b2, "2̄1"), parse_element(b2, "-2,1"));
  EXPECT_EQ(parse_element(b2, "12"), identity(b2));
  EXPECT_EQ(parse_element(GroupContext(2, 1), "1̄"), parse_element(GroupContext(2, 1), "-1"));
  EXPECT_EQ(format_element(parse_element(b2, "-2,1")), "2^1,1^0");
  EXPECT_EQ(format_element(parse_element(b2, "-2,1"), Notation::Signed), "-2,1");

  const GroupContext g32(3, 2);
  EXPECT_EQ(format_element(parse_element(g32, "2^2,1^0")), "2^2,1^0");
  EXPECT_THROW(parse_element(g32, "-2,1"), ParseError);
  EXPECT_THROW(parse_element(g32, "2^3,1^0"), ParseError);
  EXPECT_THROW(parse_element(g32, "1^0,1^0"), ParseError);
  EXPECT_THROW(parse_element(g32, "1^0"), ParseError);
  EXPECT_THROW(parse_element(g32, "1^0,x"), ParseError);
  EXPECT_THROW(parse_element(g32, ""), ParseError);
}

TEST(Core, Identity) {
  EXPECT_EQ(S(identity(GroupContext(2, 2))), "1,2");
  EXPECT_EQ(format_element(identity(GroupContext(3, 1))), "1^0");
  EXPECT_EQ(identity(GroupContext(1, 3)).permutation(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(finv(identity(GroupContext(4, 3))), 0);
}

TEST(Core, Compose) {
  const GroupContext b2(2, 2);
  const auto a1 = generator(b2, L::a(1));
  EXPECT_EQ(compose(a1, a1), compose(generator(b2, L::b(1)), generator(b2, L::b(2))));
  EXPECT_EQ(S(compose(a1, a1)), "-1,-2");
  EXPECT_EQ(compose(identity(b2), B(2, "-2,1")), B(2, "-2,1"));
  EXPECT_EQ(compose(B(2, "-2,1"), B(2, "2,-1")), identity(b2));
  EXPECT_THROW(compose(identity(b2), identity(GroupContext(3, 2))), ContextMismatch);
}

TEST(Core, SignedCompositionIsFunctionComposition) {
  const GroupContext b3(2, 3);
  auto apply = [](const ColoredPermutation& g, int i) {
    const int v = g.value(std::abs(i)) * (g.color(std::abs(i)) ? -1 : 1);
    return i < 0 ? -v : v;
  };
  for (const auto& g : enumerate(b3))
    for (const auto& h : enumerate(b3)) {
      const auto gh = compose(g, h);
      for (int i = 1; i <= 3; ++i) ASSERT_EQ(apply(gh, i), apply(g, apply(h, i)));
    }
}

TEST(Core, Inverse) {
  const GroupContext b2(2, 2);
  EXPECT_EQ(S(inverse(B(2, "-2,1"))), "2,-1");
  EXPECT_EQ(inverse(identity(b2)), identity(b2));
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(inverse(generator(GroupContext(2, 3), L::b(i))), generator(GroupContext(2, 3), L::b(i)));
}

TEST(Core, Stats) {
  const auto s = stats(B(2, "-2,1"));
  EXPECT_EQ(s.inv, 1);
  EXPECT_EQ(s.color_sum, 1);
  EXPECT_EQ(s.finv, 3);
  EXPECT_EQ(s.descent_set, (std::vector<int>{1}));
  EXPECT_EQ(s.inv_set, (std::vector<std::pair<int, int>>{{1, 2}}));

  const auto z = stats(identity(GroupContext(3, 3)));
  EXPECT_EQ(z.inv + z.color_sum + z.finv, 0);
  EXPECT_TRUE(z.inv_set.empty());
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(finv(mu0(GroupContext(2, n))), n * n);
}

TEST(Core, Generators) {
  const GroupContext b3(2, 3);
  EXPECT_EQ(generator(b3, L::a(1)), B(3, "2̄13"));
  EXPECT_EQ(generator(b3, L::b(2)), B(3, "12̄3"));
  EXPECT_THROW(generator(b3, L::a(3)), std::out_of_range);
  EXPECT_THROW(generator(b3, L::b(0)), std::out_of_range);

  const GroupContext g32(3, 2);
  const auto b1 = generator(g32, L::b(1));
  EXPECT_NE(compose(b1, b1), identity(g32));
  EXPECT_EQ(compose(compose(b1, b1), b1), identity(g32));
  EXPECT_EQ(parse_generator("a12"), L::a(12));
  EXPECT_THROW(parse_generator("c1"), std::invalid_argument);
  EXPECT_THROW(parse_generator("b0"), std::invalid_argument);
}

TEST(Core, RightMultiply) {
  const GroupContext b2(2, 2);
  EXPECT_EQ(S(right_multiply(B(2, "1,-2"), L::a(1))), "2,1");
  EXPECT_EQ(S(right_multiply(identity(b2), L::b(1))), "-1,2");
  const GroupContext g31(3, 1);
  EXPECT_EQ(right_multiply(right_multiply(identity(g31), L::b(1)), L::b(1)).color(1), 2);

  for (int r = 1; r <= 3; ++r) {
    const GroupContext ctx(r, 3);
    for (const auto& g : enumerate(ctx))
      for (const auto& s : generators(ctx)) ASSERT_EQ(right_multiply(g, s), compose(g, generator(ctx, s)));
  }
}

TEST(Core, Duality) {
  const GroupContext b2(2, 2);
  EXPECT_EQ(dual(identity(b2)), mu0(b2));
  EXPECT_EQ(S(mu0(b2)), "-2,-1");
  EXPECT_EQ(S(dual(B(2, "-1,2"))), "-2,1");
  EXPECT_EQ(finv(dual(B(2, "-1,2"))), 3);
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) {
      const GroupContext ctx(r, n);
      const auto top = finv(mu0(ctx));
      for (const auto& g : enumerate(ctx)) {
        ASSERT_EQ(dual(dual(g)), g);
        ASSERT_EQ(finv(g) + finv(dual(g)), top);
      }
    }
}

TEST(Core, Enumerate) {
  EXPECT_EQ(enumerate(GroupContext(2, 2)).size(), 8u);
  EXPECT_EQ(enumerate(GroupContext(1, 3)).size(), 6u);
  EXPECT_EQ(enumerate(GroupContext(3, 2)).size(), 18u);
  const GroupContext ctx(3, 3);
  const auto all = enumerate(ctx);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    ASSERT_EQ(index_of(all[i]), i);
    ASSERT_EQ(element_at(ctx, i), all[i]);
  }
  EXPECT_NO_THROW(enumerate(GroupContext(2, 3, 48)));
}

TEST(Core, GroupAxiomsExhaustive) {
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 2; ++n) {
      const GroupContext ctx(r, n);
      const auto all = enumerate(ctx);
      const auto e = identity(ctx);
      for (const auto& a : all) {
        ASSERT_EQ(compose(a, inverse(a)), e);
        ASSERT_EQ(compose(inverse(a), a), e);
        ASSERT_EQ(compose(e, a), a);
        for (const auto& b : all)
          for (const auto& c : all) ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
      }
    }
}

TEST(Core, GroupAxiomsRandom) {
  const GroupContext ctx(4, 5);
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<std::uint64_t> pick(0, ctx.order() - 1);
  for (int k = 0; k < 10000; ++k) {
    const auto a = element_at(ctx, pick(rng));
    const auto b = element_at(ctx, pick(rng));
    const auto c = element_at(ctx, pick(rng));
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    ASSERT_EQ(compose(a, inverse(a)), identity(ctx));
  }
}

TEST(Core, FinvFormula) {
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 3; ++n)
      for (const auto& g : enumerate(GroupContext(r, n))) {
        const auto s = stats(g);
        ASSERT_EQ(s.finv, r * s.inv + s.color_sum);
        ASSERT_EQ(s.inv, static_cast<int>(s.inv_set.size()));
      }
}

TEST(Core, ValueColorsRoundTrip) {
  for (const auto& g : enumerate(GroupContext(3, 3))) {
    const auto vc = value_colors(g);
    ASSERT_EQ(from_value_colors(g.context(), g.permutation(), vc), g);
    const auto inv = inverse(g);
    for (int j = 1; j <= 3; ++j) ASSERT_EQ(vc[j - 1], (3 - inv.color(j)) % 3);
  }
}
