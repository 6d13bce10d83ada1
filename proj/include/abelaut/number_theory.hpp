#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelaut/error.hpp"

namespace abelaut {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Prime = std::uint64_t;

/// Limits for deterministic trial-division factorization. Any integer up to
/// max_trial_divisor^2 is fully factored: once every divisor up to the bound
/// has been removed, a cofactor > 1 must be prime.
struct FactorBound {
  std::uint64_t max_trial_divisor = 1'000'000;

  std::uint64_t max_modulus() const {
    return max_trial_divisor * max_trial_divisor;
  }
};

struct PrimePower {
  Prime prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are a proven
/// witness set for every 64-bit integer.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Prime factorization with primes ascending. factorize(1) is empty.
inline std::vector<PrimePower> factorize(std::uint64_t n,
                                         const FactorBound& bound = {}) {
  if (n == 0) throw InvalidModulus("cannot factor 0");
  if (n > bound.max_modulus()) {
    throw FactorizationOverflow(std::to_string(n) +
                                " exceeds the factorization bound " +
                                std::to_string(bound.max_modulus()));
  }
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t q) {
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) out.push_back({q, e});
  };
  strip(2);
  for (std::uint64_t q = 3; q <= bound.max_trial_divisor && q * q <= n;
       q += 2) {
    strip(q);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

/// Multiplicity of p in x, by repeated division. x must be nonzero.
inline int multiplicity(BigInt x, Prime p) {
  int v = 0;
  const BigInt q = p;
  while (x != 0 && x % q == 0) {
    x /= q;
    ++v;
  }
  return v;
}

inline BigInt ipow(Prime p, std::uint64_t e) {
  return boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
}

/// Squarefreeness of an arbitrary-size positive integer. Trial division
/// removes every prime up to the bound; what remains has only prime factors
/// above the bound, so if it is at most bound^3 it is squarefree unless it is
/// a perfect square. Larger cofactors cannot be decided and throw.
inline bool is_squarefree(const BigInt& value, const FactorBound& bound = {}) {
  if (value <= 0) throw InvalidModulus("squarefree test needs a positive integer");
  BigInt n = value;
  const std::uint64_t limit = bound.max_trial_divisor;
  for (std::uint64_t q = 2; q <= limit; q += (q == 2 ? 1 : 2)) {
    if (BigInt(q) * q > n) break;
    if (n % q == 0) {
      n /= q;
      if (n % q == 0) return false;
    }
  }
  if (n == 1) return true;
  const BigInt b = limit;
  if (n > b * b * b) {
    throw FactorizationOverflow("cofactor " + n.str() +
                                " too large to test for squarefreeness");
  }
  BigInt root = boost::multiprecision::sqrt(n);
  return root * root != n;
}

/// Primality of an arbitrary integer. Beyond 64 bits only a trial-division
/// factor (proving compositeness) gives an answer.
inline bool is_prime(const BigInt& value, const FactorBound& bound = {}) {
  if (value < 2) return false;
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return is_prime(value.convert_to<std::uint64_t>());
  }
  for (std::uint64_t q = 2; q <= bound.max_trial_divisor; q += (q == 2 ? 1 : 2)) {
    if (value % q == 0) return false;
  }
  throw FactorizationOverflow("primality of " + value.str() +
                              " is outside the deterministic range");
}

inline std::string to_string(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace abelaut
