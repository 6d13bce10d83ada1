#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace abelaut::oracle {
namespace {

const PGroupShape kZ2xZ4(2, {1, 2});

TEST(ElementOrder, Examples) {
  EXPECT_EQ(element_order({0, 0}, kZ2xZ4), 1u);
  EXPECT_EQ(element_order({1, 2}, kZ2xZ4), 2u);
  EXPECT_EQ(element_order({0, 1}, kZ2xZ4), 4u);
  EXPECT_EQ(element_order({0, 3}, kZ2xZ4), 4u);
  EXPECT_EQ(element_order({3, 6}, PGroupShape(3, {1, 2})), 3u);
}

TEST(ElementOrder, MatchesRepeatedAddition) {
  const PGroupShape s(3, {1, 2, 2});
  const std::vector<std::uint64_t> mods{3, 9, 9};
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 9; ++b)
      for (std::uint64_t c = 0; c < 9; ++c) {
        std::uint64_t k = 1;
        while ((k * a) % 3 || (k * b) % 9 || (k * c) % 9) ++k;
        EXPECT_EQ(element_order({a, b, c}, s), k);
      }
}

TEST(SubgroupClosure, Examples) {
  EXPECT_EQ(subgroup_closure({}, kZ2xZ4), 1u);
  const std::vector<ElementVector> canonical{{1, 0}, {0, 1}};
  EXPECT_EQ(subgroup_closure(canonical, kZ2xZ4), 8u);
  const std::vector<ElementVector> order_two{{0, 2}};
  EXPECT_EQ(subgroup_closure(order_two, kZ2xZ4), 2u);
  const std::vector<ElementVector> diagonal{{1, 1}};
  EXPECT_EQ(subgroup_closure(diagonal, kZ2xZ4), 4u);
}

TEST(SubgroupClosure, SizeDividesGroupOrder) {
  const PGroupShape s(2, {1, 2, 3});
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> c0(0, 1), c1(0, 3), c2(0, 7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ElementVector> gens(trial % 3);
    for (auto& g : gens) g = {c0(rng), c1(rng), c2(rng)};
    EXPECT_EQ(64u % subgroup_closure(gens, s), 0u);
  }
}

TEST(CountAutomorphisms, Examples) {
  EXPECT_EQ(count_automorphisms(PGroupShape(2, {1, 1})), 6);
  EXPECT_EQ(count_automorphisms(PGroupShape(3, {1})), 2);
  EXPECT_EQ(count_automorphisms(PGroupShape(2, {1, 2})), 8);
  EXPECT_EQ(count_automorphisms(PGroupShape(2, {2, 3})), 128);
  EXPECT_EQ(count_automorphisms(PGroupShape(3, {1, 2})), 108);
  EXPECT_EQ(count_automorphisms(PGroupShape(2, {1, 1, 2})), 192);
}

TEST(CountAutomorphisms, AgreesWithNaiveCount) {
  for (const auto& s : testing::small_pgroup_shapes(32, 40'000)) {
    std::vector<std::uint64_t> mods;
    for (int e : s.exponents()) mods.push_back(ipow(s.prime(), e).convert_to<std::uint64_t>());
    if (s.order() > 16 && s.rank() > 1) continue;
    EXPECT_EQ(count_automorphisms(s), testing::naive_automorphism_count(mods))
        << to_string(s);
  }
}

TEST(CountAutomorphisms, BoundedByTupleCount) {
  for (const auto& s : testing::small_pgroup_shapes(64, 1'000'000)) {
    const BigInt count = count_automorphisms(s);
    EXPECT_GT(count, 0);
    EXPECT_LE(count, boost::multiprecision::pow(s.order(), static_cast<unsigned>(s.rank())));
  }
}

TEST(CountAutomorphisms, BudgetExceeded) {
  // |G|^n = 16^4 = 65536.
  const PGroupShape z2_4(2, {1, 1, 1, 1});
  EXPECT_THROW(count_automorphisms(z2_4, OracleBudget{65'535}), BudgetExceeded);
  EXPECT_EQ(count_automorphisms(z2_4, OracleBudget{65'536}), 20160);
  EXPECT_FALSE(within_budget(PGroupShape(2, {2, 2, 2}), OracleBudget{1000}));
}

TEST(CountAutomorphisms, LargeCyclicWithinBudget) {
  // n = 1, |G| = 2^19: the tuple count equals |G|.
  const PGroupShape s(2, {19});
  EXPECT_EQ(count_automorphisms(s), ipow(2, 18));
}

}  // namespace
}  // namespace abelaut::oracle
