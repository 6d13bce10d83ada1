#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace abelaut {
namespace {

std::vector<std::vector<int>> collect_partitions(int a) {
  std::vector<std::vector<int>> out;
  for (auto&& p : partitions(a)) out.push_back(p);
  return out;
}

std::vector<GroupShape> collect_order(std::uint64_t n) {
  std::vector<GroupShape> out;
  for (auto&& g : groups_of_order(n)) out.push_back(g);
  return out;
}

TEST(Partitions, Examples) {
  EXPECT_EQ(collect_partitions(3),
            (std::vector<std::vector<int>>{{3}, {1, 2}, {1, 1, 1}}));
  EXPECT_EQ(collect_partitions(1), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(collect_partitions(4).size(), 5u);
  EXPECT_EQ(collect_partitions(4),
            (std::vector<std::vector<int>>{{4}, {1, 3}, {2, 2}, {1, 1, 2}, {1, 1, 1, 1}}));
  EXPECT_THROW(PartitionGenerator(0), InvalidShape);
}

TEST(Partitions, CountSumAndOrder) {
  for (int a = 1; a <= 22; ++a) {
    const auto all = collect_partitions(a);
    EXPECT_EQ(all.size(), testing::partition_count(a)) << a;
    std::set<std::vector<int>> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& p = all[i];
      EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
      int sum = 0;
      for (int x : p) sum += x;
      EXPECT_EQ(sum, a);
      if (i > 0) {
        // Non-increasing forms strictly decrease lexicographically.
        std::vector<int> prev(all[i - 1].rbegin(), all[i - 1].rend());
        std::vector<int> cur(p.rbegin(), p.rend());
        EXPECT_GT(prev, cur);
      }
    }
  }
}

TEST(GroupsOfOrder, Examples) {
  EXPECT_EQ(collect_order(16).size(), 5u);
  EXPECT_EQ(collect_order(54).size(), 3u);
  const auto one = collect_order(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].is_trivial());
}

TEST(GroupsOfOrder, SmallestPrimeVariesSlowest) {
  const auto groups = collect_order(36);
  std::vector<std::string> names;
  for (const auto& g : groups) names.push_back(to_string(g));
  EXPECT_EQ(names, (std::vector<std::string>{"Z4 x Z9", "Z4 x Z3 x Z3",
                                             "Z2 x Z2 x Z9", "Z2 x Z2 x Z3 x Z3"}));
}

TEST(GroupsOfOrder, CountsMatchPartitionProduct) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    const auto groups = collect_order(n);
    EXPECT_EQ(groups.size(), testing::abelian_group_count(n)) << n;
    for (const auto& g : groups) EXPECT_EQ(g.order(), n);
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (std::size_t j = i + 1; j < groups.size(); ++j)
        EXPECT_NE(groups[i], groups[j]);
  }
}

TEST(GroupsUpTo, Examples) {
  std::vector<std::string> names;
  for (auto&& [order, g] : groups_up_to(4)) names.push_back(to_string(g));
  EXPECT_EQ(names, (std::vector<std::string>{"Z1", "Z2", "Z3", "Z4", "Z2 x Z2"}));

  std::size_t count = 0;
  for (auto&& [order, g] : groups_up_to(1)) {
    EXPECT_TRUE(g.is_trivial());
    ++count;
  }
  EXPECT_EQ(count, 1u);

  count = 0;
  for (auto&& item : groups_up_to(8)) {
    (void)item;
    ++count;
  }
  EXPECT_EQ(count, 11u);  // 1+1+1+2+1+1+1+3
}

TEST(GroupsUpTo, DeterministicAndOrdered) {
  std::vector<std::pair<std::uint64_t, std::string>> a, b;
  for (auto&& [order, g] : groups_up_to(400)) a.emplace_back(order, to_string(g));
  for (auto&& [order, g] : groups_up_to(400)) b.emplace_back(order, to_string(g));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(),
                             [](auto& x, auto& y) { return x.first < y.first; }));
}

TEST(SweepChunks, ResultIndependentOfChunking) {
  auto run = [](unsigned workers) {
    auto parts = sweep_chunks(500, workers, [](OrderChunk c) {
      std::vector<std::string> names;
      for (auto&& [order, g] : groups_in_range(c.first, c.last))
        names.push_back(std::to_string(order) + ":" + to_string(g));
      return names;
    });
    std::vector<std::string> flat;
    for (auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
    return flat;
  };
  const auto serial = run(1);
  for (unsigned w : {2u, 3u, 7u, 16u}) EXPECT_EQ(run(w), serial) << w;
}

TEST(SplitOrders, CoversRangeExactly) {
  for (std::uint64_t n : {1u, 2u, 10u, 97u}) {
    for (unsigned w : {1u, 3u, 8u, 200u}) {
      const auto chunks = split_orders(n, w);
      ASSERT_FALSE(chunks.empty());
      EXPECT_EQ(chunks.front().first, 1u);
      EXPECT_EQ(chunks.back().last, n);
      for (std::size_t i = 1; i < chunks.size(); ++i)
        EXPECT_EQ(chunks[i].first, chunks[i - 1].last + 1);
    }
  }
}

}  // namespace
}  // namespace abelaut
