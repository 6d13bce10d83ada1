#include "gtest/gtest.h"
#include "test_support.hpp"

namespace abelaut {
namespace {

TEST(VerifyFormula, AgreesUpToOrder48) {
  const VerifyReport r = verify_formula(48, oracle::OracleBudget{}, 4);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.groups_mismatched, 0u);
  EXPECT_GT(r.groups_passed, 0u);
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= 48; ++n) total += testing::abelian_group_count(n);
  EXPECT_EQ(r.groups_passed + r.groups_skipped, total);
}

TEST(VerifyFormula, SmallBudgetSkipsInsteadOfFailing) {
  const VerifyReport r = verify_formula(32, oracle::OracleBudget{64}, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.groups_skipped, 0u);
  EXPECT_GT(r.shapes_skipped, 0u);
}

}  // namespace
}  // namespace abelaut
