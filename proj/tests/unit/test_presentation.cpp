#include <gtest/gtest.h>

#include "flagweak/presentation.hpp"
#include "support.hpp"

using namespace flagweak;
using flagweak::test::S;

class RelationsB : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(RelationsB, HoldInModel) {
  const auto [r, n] = GetParam();
  const GroupContext ctx(r, n);
  const auto report = verify_relations_B(ctx);
  EXPECT_TRUE(report.ok()) << (report.ok() ? "" : report.failures.front().relation);
  std::uint64_t instances = 0;
  for (const auto& f : report.families) {
    EXPECT_EQ(f.failures, 0u) << f.id;
    instances += f.instances;
  }
  EXPECT_GT(instances, 0u);
  EXPECT_EQ(closure_order(ctx, all_generators(ctx)), ctx.order());
}

INSTANTIATE_TEST_SUITE_P(Groups, RelationsB,
                         ::testing::Values(std::pair{1, 3}, std::pair{2, 1}, std::pair{2, 2}, std::pair{2, 4},
                                           std::pair{3, 3}, std::pair{4, 2}, std::pair{4, 4}));

TEST(RelationsA, HoldForSmallN) {
  for (int n = 2; n <= 5; ++n) {
    const auto report = verify_relations_A(n);
    EXPECT_TRUE(report.ok()) << n;
    EXPECT_FALSE(report.families.empty());
  }
  EXPECT_THROW(verify_relations_A(1), std::invalid_argument);
}

TEST(Closure, EvenSubgroup) {
  std::uint64_t factorial = 1;
  for (int n = 2; n <= 5; ++n) {
    factorial *= n;
    const GroupContext ctx(2, n);
    EXPECT_EQ(closure_order(ctx, a_generators(ctx)), (std::uint64_t{1} << (n - 1)) * factorial) << n;
  }
  EXPECT_EQ(closure_order(GroupContext(2, 3), {}), 1u);
  EXPECT_EQ(closure_order(GroupContext(3, 2), {identity(GroupContext(3, 2))}), 1u);
  EXPECT_THROW(closure_order(GroupContext(2, 4), all_generators(GroupContext(2, 4)), 10), CapExceeded);
}

TEST(Derivation, ReplaysToIdentity) {
  for (auto [n, i] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 3}}) {
    const auto steps = remark_derivation(n, i);
    ASSERT_EQ(steps.size(), 8u);
    for (const auto& s : steps) {
      EXPECT_FALSE(s.expression.empty());
      EXPECT_EQ(s.value, identity(GroupContext(2, n))) << s.expression << " = " << S(s.value);
    }
    EXPECT_TRUE(verify_remark_derivation(n, i));
  }
  EXPECT_TRUE(verify_remark_derivation(4));
  EXPECT_THROW(verify_remark_derivation(2), std::invalid_argument);
}
