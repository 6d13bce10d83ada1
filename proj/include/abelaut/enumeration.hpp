#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <iterator>
#include <optional>
#include <utility>
#include <vector>

#include "abelaut/error.hpp"
#include "abelaut/number_theory.hpp"
#include "abelaut/shape.hpp"

namespace abelaut {

/// Adapts any type with `std::optional<T> next()` into an input range, so
/// streams can be consumed with range-for.
template <class Cursor>
class CursorRange {
 public:
  using value_type = typename decltype(std::declval<Cursor&>().next())::value_type;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CursorRange::value_type;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    explicit iterator(Cursor* cursor) : cursor_(cursor) { ++*this; }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = cursor_->next();
      if (!current_) cursor_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.cursor_ == b.cursor_;
    }

   private:
    Cursor* cursor_ = nullptr;
    std::optional<value_type> current_;
  };

  explicit CursorRange(Cursor cursor) : cursor_(std::move(cursor)) {}

  iterator begin() { return iterator(&cursor_); }
  iterator end() { return iterator(); }

 private:
  Cursor cursor_;
};

/// Streams the partitions of `target`. Internally partitions are generated
/// as non-increasing part lists in descending lexicographic order
/// ([a], [a-1,1], ..., [1,...,1]); each is emitted reversed, i.e. ascending,
/// which is the exponent order a PGroupShape uses.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int target) : target_(target) {
    if (target < 1) throw InvalidShape("partition target must be positive");
  }

  std::optional<std::vector<int>> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      parts_.assign(1, target_);
    } else {
      // Rightmost part above 1; everything after it is a run of 1s.
      std::size_t k = parts_.size();
      while (k > 0 && parts_[k - 1] == 1) --k;
      if (k == 0) {
        done_ = true;
        return std::nullopt;
      }
      --k;
      int remainder = static_cast<int>(parts_.size() - k - 1) + 1;
      const int cap = --parts_[k];
      parts_.resize(k + 1);
      while (remainder > 0) {
        const int piece = std::min(cap, remainder);
        parts_.push_back(piece);
        remainder -= piece;
      }
    }
    return std::vector<int>(parts_.rbegin(), parts_.rend());
  }

 private:
  int target_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> parts_;
};

inline CursorRange<PartitionGenerator> partitions(int target) {
  return CursorRange<PartitionGenerator>(PartitionGenerator(target));
}

/// Streams one GroupShape per isomorphism class of abelian groups of order N.
/// Each prime power p^a || N contributes a partition of a; the choices are
/// combined odometer-style with the smallest prime varying slowest, so the
/// sequence is lexicographic in (partition index for p_1, for p_2, ...).
class GroupsOfOrder {
 public:
  explicit GroupsOfOrder(std::uint64_t order, const FactorBound& bound = {})
      : factors_(factorize(order, bound)) {
    for (const auto& pp : factors_) {
      std::vector<std::vector<int>> list;
      for (auto&& part : partitions(pp.exponent)) list.push_back(part);
      choices_.push_back(std::move(list));
    }
    cursor_.assign(factors_.size(), 0);
  }

  std::optional<GroupShape> next() {
    if (done_) return std::nullopt;
    GroupShape g;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      g.add(PGroupShape(factors_[i].prime, choices_[i][cursor_[i]]));
    }
    std::size_t i = factors_.size();
    while (i > 0) {
      --i;
      if (++cursor_[i] < choices_[i].size()) break;
      cursor_[i] = 0;
      if (i == 0) done_ = true;
    }
    if (factors_.empty()) done_ = true;
    return g;
  }

 private:
  std::vector<PrimePower> factors_;
  std::vector<std::vector<std::vector<int>>> choices_;
  std::vector<std::size_t> cursor_;
  bool done_ = false;
};

inline CursorRange<GroupsOfOrder> groups_of_order(std::uint64_t order,
                                                  const FactorBound& bound = {}) {
  if (order < 1) throw InvalidModulus("group order must be at least 1");
  return CursorRange<GroupsOfOrder>(GroupsOfOrder(order, bound));
}

struct OrderedGroup {
  std::uint64_t order;
  GroupShape group;
};

/// groups_of_order(k) for k = first, first+1, ..., last.
class GroupsInRange {
 public:
  GroupsInRange(std::uint64_t first, std::uint64_t last,
                const FactorBound& bound = {})
      : next_order_(first), last_(last), bound_(bound) {}

  std::optional<OrderedGroup> next() {
    for (;;) {
      if (current_) {
        if (auto g = current_->next()) return OrderedGroup{order_, std::move(*g)};
        current_.reset();
      }
      if (next_order_ > last_) return std::nullopt;
      order_ = next_order_++;
      current_.emplace(order_, bound_);
    }
  }

 private:
  std::uint64_t next_order_;
  std::uint64_t last_;
  FactorBound bound_;
  std::uint64_t order_ = 0;
  std::optional<GroupsOfOrder> current_;
};

inline CursorRange<GroupsInRange> groups_up_to(std::uint64_t max_order,
                                               const FactorBound& bound = {}) {
  if (max_order < 1) throw InvalidModulus("max order must be at least 1");
  return CursorRange<GroupsInRange>(GroupsInRange(1, max_order, bound));
}

inline CursorRange<GroupsInRange> groups_in_range(std::uint64_t first,
                                                  std::uint64_t last,
                                                  const FactorBound& bound = {}) {
  return CursorRange<GroupsInRange>(GroupsInRange(first, last, bound));
}

struct OrderChunk {
  std::uint64_t first;
  std::uint64_t last;
};

/// Splits [1, max_order] into at most `chunks` contiguous, non-empty ranges.
inline std::vector<OrderChunk> split_orders(std::uint64_t max_order,
                                            unsigned chunks) {
  chunks = std::max(1u, chunks);
  std::vector<OrderChunk> out;
  const std::uint64_t step = (max_order + chunks - 1) / chunks;
  for (std::uint64_t lo = 1; lo <= max_order; lo += step) {
    out.push_back({lo, std::min(max_order, lo + step - 1)});
  }
  return out;
}

/// Runs `work(chunk)` on each order range concurrently and returns the
/// results in chunk order, so merged output does not depend on scheduling.
template <class Work>
auto sweep_chunks(std::uint64_t max_order, unsigned workers, Work work)
    -> std::vector<decltype(work(OrderChunk{}))> {
  using Result = decltype(work(OrderChunk{}));
  const auto chunks = split_orders(max_order, workers);
  std::vector<Result> out;
  out.reserve(chunks.size());
  if (chunks.size() <= 1) {
    for (const auto& c : chunks) out.push_back(work(c));
    return out;
  }
  std::vector<std::future<Result>> pending;
  for (const auto& c : chunks) {
    pending.push_back(std::async(std::launch::async, work, c));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace abelaut
