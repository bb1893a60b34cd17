#include <gtest/gtest.h>

#include <limits>

#include "flagweak/genfun.hpp"
#include "flagweak/order.hpp"

using namespace flagweak;

TEST(Poly, Arithmetic) {
  const UniPoly p({1, 1});
  EXPECT_EQ(p.pow(3), UniPoly({1, 3, 3, 1}));
  EXPECT_EQ((p * UniPoly({1, -1})).to_string(), "1 - q^2");
  EXPECT_EQ(UniPoly({0, 0}).degree(), -1);
  EXPECT_TRUE(UniPoly({0}).is_zero());
  EXPECT_EQ(UniPoly::monomial(3, 2, 't').to_string(), "3*t^2");
  EXPECT_EQ(UniPoly({1, 4, 3}, 't').to_string(), "1 + 4*t + 3*t^2");
  EXPECT_EQ(UniPoly().to_string(), "0");
  EXPECT_EQ(UniPoly({2, 0, 1}).evaluate(3), 11);
  EXPECT_EQ(UniPoly({1, 2}, 't'), UniPoly({1, 2}, 'q'));
  auto acc = UniPoly::constant(1);
  acc.add_term(4, -2);
  EXPECT_EQ(acc[4], -2);
  EXPECT_EQ(acc[9], 0);
}

TEST(Poly, Overflow) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(checked::add(big, 1), std::overflow_error);
  EXPECT_THROW(checked::mul(big / 2 + 1, 2), std::overflow_error);
  EXPECT_THROW(UniPoly({big}) + UniPoly({1}), std::overflow_error);
  EXPECT_EQ(checked::mul(-3, 4), -12);
}

TEST(Poly, Bivariate) {
  const auto x = BiPoly::monomial(1, 1, 1) + BiPoly::constant(1);
  EXPECT_EQ(x.to_string(), "1 + q*t");
  const auto sq = x.pow(2);
  EXPECT_EQ(sq.coefficient(1, 1), 2);
  EXPECT_EQ(sq.at_q_equals_one(), UniPoly({1, 2, 1}));
  EXPECT_EQ(sq.at_t_equals_one().variable(), 'q');
  EXPECT_EQ(BiPoly::from_t(UniPoly({0, 1})), BiPoly::monomial(1, 0, 1));
  EXPECT_EQ(BiPoly::from_q(UniPoly({0, 1})) * BiPoly::from_t(UniPoly({0, 1})), BiPoly::monomial(1, 1, 1));
  EXPECT_TRUE((x + BiPoly::monomial(-1, 1, 1) + BiPoly::constant(-1)).is_zero());
}

TEST(QIntegers, Basics) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(1), UniPoly({1}));
  EXPECT_EQ(q_int(4), UniPoly({1, 1, 1, 1}));
  EXPECT_EQ(prod_q_int(2, 2), UniPoly({1, 2, 2, 2, 1}));
  EXPECT_EQ(prod_q_int(1, 3), UniPoly({1, 2, 2, 1}));
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(prod_q_int(r, n).evaluate(1), static_cast<std::int64_t>(GroupContext(r, n).order()));
}

TEST(Eulerian, SmallN) {
  EXPECT_EQ(eulerian(1), UniPoly({1}, 't'));
  EXPECT_EQ(eulerian(2), UniPoly({1, 1}, 't'));
  EXPECT_EQ(eulerian(3), UniPoly({1, 4, 1}, 't'));
  EXPECT_EQ(eulerian(4), UniPoly({1, 11, 11, 1}, 't'));
  EXPECT_EQ(sn_qt(3).at_t_equals_one(), UniPoly({1, 2, 2, 1}));
}

TEST(Genfun, Examples) {
  EXPECT_EQ(finv_genfun(GroupContext(2, 2)).to_string(), "1 + 2*q + 2*q^2 + 2*q^3 + q^4");
  EXPECT_EQ(wdes_genfun(GroupContext(2, 2)).to_string(), "1 + 4*t + 3*t^2");
  EXPECT_EQ(bivariate_genfun(GroupContext(2, 1)).to_string(), "1 + q*t");
  EXPECT_EQ(wdes_genfun(GroupContext(3, 1)), UniPoly({1, 2}));
}

TEST(Genfun, RankGenfunAgrees) {
  for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {1, 4}})
    EXPECT_EQ(rank_genfun(build_hasse(GroupContext(r, n))), finv_genfun(GroupContext(r, n)));
}

class Identities : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Identities, SumsMatchClosedForms) {
  const auto [r, n] = GetParam();
  const GroupContext ctx(r, n);
  EXPECT_EQ(finv_genfun(ctx), prod_q_int(r, n));
  EXPECT_TRUE(check_wdes_identity(ctx));
  EXPECT_TRUE(check_bivariate_identity(ctx, 2));
  const auto b = bivariate_genfun(ctx);
  EXPECT_EQ(b.at_q_equals_one(), wdes_genfun(ctx));
  EXPECT_EQ(b.at_t_equals_one(), finv_genfun(ctx));
  EXPECT_EQ(wdes_rhs(r, n).evaluate(1), static_cast<std::int64_t>(ctx.order()));
}

INSTANTIATE_TEST_SUITE_P(Groups, Identities,
                         ::testing::Values(std::pair{1, 1}, std::pair{1, 4}, std::pair{2, 1}, std::pair{2, 3},
                                           std::pair{2, 4}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 3}));
