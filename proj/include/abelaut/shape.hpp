#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abelaut/error.hpp"
#include "abelaut/number_theory.hpp"

namespace abelaut {

/// Z_{p^e_1} x ... x Z_{p^e_n} with 1 <= e_1 <= ... <= e_n.
class PGroupShape {
 public:
  PGroupShape(Prime p, std::vector<int> exponents)
      : p_(p), exponents_(std::move(exponents)) {
    if (!is_prime(p_)) {
      throw InvalidShape(std::to_string(p_) + " is not prime");
    }
    if (exponents_.empty()) {
      throw InvalidShape("a p-group shape needs at least one cyclic factor");
    }
    for (int e : exponents_) {
      if (e < 1) throw InvalidShape("exponents must be positive");
    }
    std::sort(exponents_.begin(), exponents_.end());
  }

  Prime prime() const noexcept { return p_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  std::size_t rank() const noexcept { return exponents_.size(); }

  /// a such that |G| = p^a.
  std::int64_t order_exponent() const noexcept {
    std::int64_t a = 0;
    for (int e : exponents_) a += e;
    return a;
  }

  BigInt order() const { return ipow(p_, order_exponent()); }

  friend bool operator==(const PGroupShape&, const PGroupShape&) = default;

 private:
  Prime p_;
  std::vector<int> exponents_;
};

struct Level {
  int exponent;
  int multiplicity;

  friend bool operator==(const Level&, const Level&) = default;
};

/// The same partition as (e_j, k_j) pairs with e_1 < ... < e_m.
struct RunLengthShape {
  Prime p;
  std::vector<Level> levels;

  std::int64_t rank() const noexcept {
    std::int64_t n = 0;
    for (const auto& l : levels) n += l.multiplicity;
    return n;
  }

  std::int64_t order_exponent() const noexcept {
    std::int64_t a = 0;
    for (const auto& l : levels)
      a += static_cast<std::int64_t>(l.exponent) * l.multiplicity;
    return a;
  }

  std::vector<int> expand() const {
    std::vector<int> out;
    for (const auto& l : levels) out.insert(out.end(), l.multiplicity, l.exponent);
    return out;
  }

  friend bool operator==(const RunLengthShape&, const RunLengthShape&) = default;
};

inline RunLengthShape run_length(const PGroupShape& shape) {
  RunLengthShape out{shape.prime(), {}};
  for (int e : shape.exponents()) {
    if (!out.levels.empty() && out.levels.back().exponent == e) {
      ++out.levels.back().multiplicity;
    } else {
      out.levels.push_back({e, 1});
    }
  }
  return out;
}

/// A finite abelian group as its primary decomposition. The empty map is the
/// trivial group.
class GroupShape {
 public:
  GroupShape() = default;

  explicit GroupShape(std::vector<PGroupShape> parts) {
    for (auto& part : parts) add(std::move(part));
  }

  const std::map<Prime, PGroupShape>& factors() const noexcept {
    return factors_;
  }
  bool is_trivial() const noexcept { return factors_.empty(); }

  /// Direct product with a p-group. An existing p-part is extended, so the
  /// result stays canonical.
  void add(PGroupShape part) {
    auto it = factors_.find(part.prime());
    if (it == factors_.end()) {
      factors_.emplace(part.prime(), std::move(part));
      return;
    }
    std::vector<int> merged = it->second.exponents();
    merged.insert(merged.end(), part.exponents().begin(),
                  part.exponents().end());
    it->second = PGroupShape(part.prime(), std::move(merged));
  }

  BigInt order() const {
    BigInt n = 1;
    for (const auto& [p, part] : factors_) n *= part.order();
    return n;
  }

  /// Prime-power moduli p^e in canonical order (prime, then exponent).
  std::vector<BigInt> moduli() const {
    std::vector<BigInt> out;
    for (const auto& [p, part] : factors_) {
      for (int e : part.exponents()) out.push_back(ipow(p, e));
    }
    return out;
  }

  friend GroupShape direct_product(GroupShape lhs, const GroupShape& rhs) {
    for (const auto& [p, part] : rhs.factors_) lhs.add(part);
    return lhs;
  }

  friend bool operator==(const GroupShape&, const GroupShape&) = default;

 private:
  std::map<Prime, PGroupShape> factors_;
};

/// Canonical form of Z_{m_1} x ... x Z_{m_t}: each modulus is split into its
/// prime-power cyclic factors, trivial factors are dropped.
inline GroupShape canonicalize(std::span<const std::uint64_t> moduli,
                               const FactorBound& bound = {}) {
  std::map<Prime, std::vector<int>> by_prime;
  for (std::uint64_t m : moduli) {
    if (m < 1) throw InvalidModulus("modulus must be at least 1");
    for (const auto& pp : factorize(m, bound)) {
      by_prime[pp.prime].push_back(pp.exponent);
    }
  }
  GroupShape out;
  for (auto& [p, exps] : by_prime) out.add(PGroupShape(p, std::move(exps)));
  return out;
}

inline GroupShape canonicalize(std::initializer_list<std::uint64_t> moduli,
                               const FactorBound& bound = {}) {
  return canonicalize(std::span<const std::uint64_t>(moduli.begin(), moduli.size()),
                      bound);
}

}  // namespace abelaut
