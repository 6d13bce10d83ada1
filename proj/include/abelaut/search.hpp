#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "abelaut/enumeration.hpp"
#include "abelaut/formula.hpp"
#include "abelaut/number_theory.hpp"
#include "abelaut/shape.hpp"

namespace abelaut {

struct SearchBounds {
  std::uint64_t max_order = 10'000;
  std::optional<std::chrono::duration<double>> time_limit;
  FactorBound factor_bound;
};

enum class UnrealizableReason {
  /// The reduced denominator of a realized ratio is always squarefree.
  NonSquarefreeDenominator,
  /// No odd prime is realized.
  OddPrimeTarget,
};

inline std::string to_string(UnrealizableReason reason) {
  switch (reason) {
    case UnrealizableReason::NonSquarefreeDenominator:
      return "NonSquarefreeDenominator";
    case UnrealizableReason::OddPrimeTarget:
      return "OddPrimeTarget";
  }
  return "unknown";
}

struct Witness {
  GroupShape group;
  std::uint64_t order;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Unrealizable {
  UnrealizableReason reason;

  friend bool operator==(const Unrealizable&, const Unrealizable&) = default;
};

/// Absence of a witness up to the bound; this never means unrealizable.
struct NotFoundWithinBounds {
  std::uint64_t max_order_searched;

  friend bool operator==(const NotFoundWithinBounds&,
                         const NotFoundWithinBounds&) = default;
};

using SearchVerdict = std::variant<Witness, Unrealizable, NotFoundWithinBounds>;

inline void require_positive(const Rational& target) {
  if (target <= 0) throw InvalidModulus("target ratio must be positive");
}

inline std::optional<UnrealizableReason> screen(const Rational& target,
                                                const FactorBound& bound = {}) {
  require_positive(target);
  const BigInt den = boost::multiprecision::denominator(target);
  if (!is_squarefree(den, bound)) {
    return UnrealizableReason::NonSquarefreeDenominator;
  }
  if (den == 1) {
    const BigInt num = boost::multiprecision::numerator(target);
    if (num != 2 && is_prime(num)) return UnrealizableReason::OddPrimeTarget;
  }
  return std::nullopt;
}

/// True when a group of this order cannot have ratio `target`: each p-part
/// contributes a denominator of 1 or p, so every prime of the target's
/// denominator must divide the order.
inline bool denominator_prune(const Rational& target, std::uint64_t group_order) {
  BigInt den = boost::multiprecision::denominator(target);
  const BigInt order = group_order;
  for (BigInt g = gcd(den, order); g > 1; g = gcd(den, order)) den /= g;
  return den != 1;
}

/// First group in enumeration order (hence of minimal order) whose ratio is
/// exactly `target`.
inline SearchVerdict realize(const Rational& target, const SearchBounds& bounds = {}) {
  if (auto reason = screen(target, bounds.factor_bound)) return Unrealizable{*reason};

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  for (std::uint64_t order = 1; order <= bounds.max_order; ++order) {
    if (bounds.time_limit && Clock::now() - start > *bounds.time_limit) {
      return NotFoundWithinBounds{order - 1};
    }
    if (denominator_prune(target, order)) continue;
    for (auto&& g : groups_of_order(order, bounds.factor_bound)) {
      if (ratio(g) == target) return Witness{g, order};
    }
  }
  return NotFoundWithinBounds{bounds.max_order};
}

using RatioAtlas = std::map<Rational, Witness>;

/// Every ratio realized by a group of order <= max_order, each mapped to its
/// first witness in enumeration order. Order ranges are swept concurrently
/// and merged in range order, so the result is independent of `workers`.
inline RatioAtlas ratio_atlas(const SearchBounds& bounds, unsigned workers = 1) {
  auto partial = sweep_chunks(bounds.max_order, workers, [&](OrderChunk chunk) {
    RatioAtlas local;
    for (auto&& [order, g] : groups_in_range(chunk.first, chunk.last,
                                             bounds.factor_bound)) {
      local.try_emplace(ratio(g), Witness{g, order});
    }
    return local;
  });
  RatioAtlas atlas;
  for (auto& local : partial) {
    for (auto& [r, w] : local) atlas.try_emplace(r, std::move(w));
  }
  return atlas;
}

}  // namespace abelaut
