#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "abelaut/number_theory.hpp"
#include "abelaut/shape.hpp"

namespace abelaut {

/// |Aut(G)| for G = Z_{p^e_1} x ... x Z_{p^e_n}, e ascending:
///
///   prod_k (p^{d_k} - p^{k-1}) * prod_j p^{e_j (n - d_j)}
///                              * prod_i p^{(e_i - 1)(n - c_i + 1)}
///
/// with d_r = max{s : e_s = e_r} and c_r = min{s : e_s = e_r} (1-based).
inline BigInt aut_order_p(const PGroupShape& shape) {
  const auto& e = shape.exponents();
  const Prime p = shape.prime();
  const std::int64_t n = static_cast<std::int64_t>(e.size());

  std::vector<std::int64_t> d(n), c(n);
  for (std::int64_t r = 0; r < n; ++r) {
    std::int64_t lo = r, hi = r;
    while (lo > 0 && e[lo - 1] == e[r]) --lo;
    while (hi + 1 < n && e[hi + 1] == e[r]) ++hi;
    c[r] = lo + 1;
    d[r] = hi + 1;
  }

  BigInt result = 1;
  std::int64_t p_power = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    result *= ipow(p, d[k - 1]) - ipow(p, k - 1);
  }
  for (std::int64_t j = 0; j < n; ++j) p_power += e[j] * (n - d[j]);
  for (std::int64_t i = 0; i < n; ++i) p_power += (e[i] - 1) * (n - c[i] + 1);
  return result * ipow(p, p_power);
}

/// Automorphisms of coprime-order factors multiply.
inline BigInt aut_order(const GroupShape& group) {
  BigInt result = 1;
  for (const auto& [p, part] : group.factors()) result *= aut_order_p(part);
  return result;
}

inline Rational ratio(const PGroupShape& shape) {
  return Rational(aut_order_p(shape), shape.order());
}

inline Rational ratio(const GroupShape& group) {
  return Rational(aut_order(group), group.order());
}

struct ValuationParts {
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t c = 0;
  std::int64_t total = 0;

  friend bool operator==(const ValuationParts&, const ValuationParts&) = default;
};

/// Exponent of the largest power of p dividing |Aut(G)|, split as
/// n(n-1)/2 + d + c over the run-length levels (e_j, k_j):
///   d = sum_{j<m} e_j k_j (k_{j+1} + ... + k_m)
///   c = sum_{j<=m} (e_j - 1) k_j (k_j + ... + k_m)
inline ValuationParts p_valuation_of_aut(const PGroupShape& shape) {
  const RunLengthShape rl = run_length(shape);
  const auto& lv = rl.levels;
  const std::size_t m = lv.size();

  std::vector<std::int64_t> tail(m + 1, 0);
  for (std::size_t j = m; j-- > 0;) tail[j] = tail[j + 1] + lv[j].multiplicity;

  ValuationParts out;
  out.n = tail[0];
  for (std::size_t j = 0; j + 1 < m; ++j) {
    out.d += static_cast<std::int64_t>(lv[j].exponent) * lv[j].multiplicity *
             tail[j + 1];
  }
  for (std::size_t j = 0; j < m; ++j) {
    out.c += static_cast<std::int64_t>(lv[j].exponent - 1) *
             lv[j].multiplicity * tail[j];
  }
  out.total = out.n * (out.n - 1) / 2 + out.d + out.c;
  return out;
}

namespace pclass {

struct Cyclic {
  friend bool operator==(const Cyclic&, const Cyclic&) = default;
};
struct ElementaryRank2 {
  friend bool operator==(const ElementaryRank2&, const ElementaryRank2&) = default;
};
/// Z_p x Z_{p^i}, i > 1.
struct ZpTimesHigher {
  int i;
  friend bool operator==(const ZpTimesHigher&, const ZpTimesHigher&) = default;
};
struct ElementaryRank3 {
  friend bool operator==(const ElementaryRank3&, const ElementaryRank3&) = default;
};
struct General {
  friend bool operator==(const General&, const General&) = default;
};

}  // namespace pclass

using PGroupClass = std::variant<pclass::Cyclic, pclass::ElementaryRank2,
                                 pclass::ZpTimesHigher, pclass::ElementaryRank3,
                                 pclass::General>;

inline PGroupClass classify(const PGroupShape& shape) {
  const auto& e = shape.exponents();
  if (e.size() == 1) return pclass::Cyclic{};
  if (e.size() == 2 && e[0] == 1) {
    if (e[1] == 1) return pclass::ElementaryRank2{};
    return pclass::ZpTimesHigher{e[1]};
  }
  if (e == std::vector<int>{1, 1, 1}) return pclass::ElementaryRank3{};
  return pclass::General{};
}

inline std::string to_string(const PGroupClass& cls) {
  struct Namer {
    std::string operator()(const pclass::Cyclic&) const { return "Cyclic"; }
    std::string operator()(const pclass::ElementaryRank2&) const {
      return "ElementaryRank2";
    }
    std::string operator()(const pclass::ZpTimesHigher& z) const {
      return "ZpTimesHigher(" + std::to_string(z.i) + ")";
    }
    std::string operator()(const pclass::ElementaryRank3&) const {
      return "ElementaryRank3";
    }
    std::string operator()(const pclass::General&) const { return "General"; }
  };
  return std::visit(Namer{}, cls);
}

/// Only "integer, divisible by p(p-1)^2" is known for the general case.
struct DivisibleGuaranteeOnly {
  friend bool operator==(const DivisibleGuaranteeOnly&,
                         const DivisibleGuaranteeOnly&) = default;
};

using ClosedForm = std::variant<Rational, DivisibleGuaranteeOnly>;

inline ClosedForm closed_form_ratio(const PGroupClass& cls, Prime p) {
  const BigInt q = p;
  const BigInt pm1 = q - 1;
  struct Eval {
    const BigInt& q;
    const BigInt& pm1;
    ClosedForm operator()(const pclass::Cyclic&) const { return Rational(pm1, q); }
    ClosedForm operator()(const pclass::ElementaryRank2&) const {
      return Rational(pm1 * pm1 * (q + 1), q);
    }
    ClosedForm operator()(const pclass::ZpTimesHigher&) const {
      return Rational(pm1 * pm1);
    }
    ClosedForm operator()(const pclass::ElementaryRank3&) const {
      return Rational(pm1 * pm1 * pm1 * (q + 1) * (q * q + q + 1));
    }
    ClosedForm operator()(const pclass::General&) const {
      return DivisibleGuaranteeOnly{};
    }
  };
  return std::visit(Eval{q, pm1}, cls);
}

}  // namespace abelaut
