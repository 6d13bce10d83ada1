#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abelaut/error.hpp"
#include "abelaut/number_theory.hpp"
#include "abelaut/shape.hpp"

// Brute-force automorphism counting for abelian p-groups. Nothing in here
// uses the closed-form order formula: an automorphism is identified with the
// tuple of images of the canonical generators, the tuple is admissible when
// each image is killed by the order of its generator, and an admissible tuple
// is an automorphism exactly when it generates the whole group (a surjective
// endomorphism of a finite group is bijective).

namespace abelaut::oracle {

using ElementVector = std::vector<std::uint64_t>;

struct OracleBudget {
  std::uint64_t max_candidate_tuples = 1'000'000;
};

/// Least k >= 1 with k*v = 0, i.e. p^max_i(e_i - v_p(x_i)) with v_p(0) = e_i.
inline std::uint64_t element_order(const ElementVector& v,
                                   const PGroupShape& shape) {
  const Prime p = shape.prime();
  const auto& e = shape.exponents();
  if (v.size() != e.size()) throw InvalidShape("element has wrong length");
  int worst = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t x = v[i];
    int val = 0;
    if (x == 0) {
      val = e[i];
    } else {
      while (x % p == 0) {
        x /= p;
        ++val;
      }
    }
    worst = std::max(worst, e[i] - val);
  }
  std::uint64_t order = 1;
  for (int k = 0; k < worst; ++k) order *= p;
  return order;
}

namespace detail {

/// Elements of a small p-group indexed in mixed radix, first coordinate
/// least significant.
class ElementTable {
 public:
  explicit ElementTable(const PGroupShape& shape) {
    size_ = 1;
    for (int e : shape.exponents()) {
      std::uint64_t m = 1;
      for (int k = 0; k < e; ++k) m *= shape.prime();
      moduli_.push_back(m);
      size_ *= m;
    }
  }

  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t encode(const ElementVector& v) const {
    std::uint64_t idx = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      if (v[i] >= moduli_[i]) throw InvalidShape("coordinate out of range");
      idx = idx * moduli_[i] + v[i];
    }
    return idx;
  }

  ElementVector decode(std::uint64_t idx) const {
    ElementVector v(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      v[i] = idx % moduli_[i];
      idx /= moduli_[i];
    }
    return v;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0, scale = 1;
    for (std::uint64_t m : moduli_) {
      std::uint64_t s = (a % m + b % m) % m;
      out += s * scale;
      scale *= m;
      a /= m;
      b /= m;
    }
    return out;
  }

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t size_ = 1;
};

/// Dense addition table for the oracle's hot loop.
class AdditionTable {
 public:
  explicit AdditionTable(const ElementTable& elems) : n_(elems.size()) {
    table_.resize(n_ * n_);
    for (std::uint64_t a = 0; a < n_; ++a)
      for (std::uint64_t b = 0; b < n_; ++b) table_[a * n_ + b] = elems.add(a, b);
  }

  std::uint32_t operator()(std::uint64_t a, std::uint64_t b) const {
    return table_[a * n_ + b];
  }

 private:
  std::uint64_t n_;
  std::vector<std::uint32_t> table_;
};

/// Breadth-first closure from 0 under adding each generator. Stops as soon
/// as `stop_at` elements have been reached.
template <class Add>
std::uint64_t closure_size(std::span<const std::uint64_t> gens,
                           std::uint64_t group_size, const Add& add,
                           std::vector<char>& seen,
                           std::vector<std::uint64_t>& queue,
                           std::uint64_t stop_at) {
  seen.assign(group_size, 0);
  queue.clear();
  seen[0] = 1;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t x = queue[head];
    for (std::uint64_t g : gens) {
      const std::uint64_t y = add(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
        if (queue.size() >= stop_at) return queue.size();
      }
    }
  }
  return queue.size();
}

inline void check_budget(const PGroupShape& shape, const OracleBudget& budget) {
  const BigInt group_order = shape.order();
  const BigInt tuples =
      boost::multiprecision::pow(group_order, static_cast<unsigned>(shape.rank()));
  if (tuples > budget.max_candidate_tuples) {
    throw BudgetExceeded("oracle needs " + tuples.str() +
                         " candidate tuples, budget is " +
                         std::to_string(budget.max_candidate_tuples));
  }
}

}  // namespace detail

inline bool within_budget(const PGroupShape& shape,
                          const OracleBudget& budget = {}) {
  const BigInt tuples = boost::multiprecision::pow(
      shape.order(), static_cast<unsigned>(shape.rank()));
  return tuples <= budget.max_candidate_tuples;
}

/// Size of the subgroup generated by `generators`.
inline std::uint64_t subgroup_closure(std::span<const ElementVector> generators,
                                      const PGroupShape& shape) {
  const detail::ElementTable elems(shape);
  std::vector<std::uint64_t> gens;
  for (const auto& g : generators) {
    if (g.size() != shape.rank()) throw InvalidShape("element has wrong length");
    gens.push_back(elems.encode(g));
  }
  std::vector<char> seen;
  std::vector<std::uint64_t> queue;
  auto add = [&](std::uint64_t a, std::uint64_t b) { return elems.add(a, b); };
  return detail::closure_size(gens, elems.size(), add, seen, queue,
                              elems.size() + 1);
}

/// |Aut(G)| by exhaustive enumeration of generator images.
///
/// The first n-1 images are closed into a subgroup H by breadth-first search.
/// For the last image g, <H, g> has |H| * q elements where q is the least
/// power of p with q*g in H, so the final generation test is a short chain
/// of multiplications by p instead of another closure.
inline BigInt count_automorphisms(const PGroupShape& shape,
                                  const OracleBudget& budget = {}) {
  detail::check_budget(shape, budget);
  const detail::ElementTable elems(shape);
  const std::uint64_t size = elems.size();
  const std::size_t n = shape.rank();
  const Prime p = shape.prime();

  // Generator i has order p^{e_i}; its image must be killed by p^{e_i}.
  std::vector<std::vector<std::uint64_t>> candidates(n);
  std::vector<std::uint64_t> times_p(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    ElementVector v = elems.decode(x);
    const std::uint64_t ord = element_order(v, shape);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t bound = 1;
      for (int k = 0; k < shape.exponents()[i]; ++k) bound *= p;
      if (bound % ord == 0) candidates[i].push_back(x);
    }
    ElementVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::uint64_t m = 1;
      for (int k = 0; k < shape.exponents()[i]; ++k) m *= p;
      w[i] = abelaut::detail::mul_mod(v[i], p, m);
    }
    times_p[x] = elems.encode(w);
  }

  std::vector<char> seen;
  std::vector<std::uint64_t> queue;
  std::vector<std::uint64_t> prefix(n - 1);
  std::vector<std::size_t> cursor(n - 1, 0);
  std::uint64_t count = 0;

  auto count_completions = [&](auto const& add) {
    for (;;) {
      for (std::size_t i = 0; i + 1 < n; ++i) prefix[i] = candidates[i][cursor[i]];
      const std::uint64_t h =
          detail::closure_size(prefix, size, add, seen, queue, size + 1);
      for (std::uint64_t g : candidates[n - 1]) {
        std::uint64_t q = 1;
        for (std::uint64_t x = g; !seen[x]; x = times_p[x]) q *= p;
        if (h * q == size) ++count;
      }
      std::size_t i = 0;
      while (i + 1 < n && ++cursor[i] == candidates[i].size()) cursor[i++] = 0;
      if (i + 1 >= n) break;
    }
  };

  if (n >= 2 && size <= 1024) {
    const detail::AdditionTable table(elems);
    count_completions(table);
  } else {
    count_completions(
        [&](std::uint64_t a, std::uint64_t b) { return elems.add(a, b); });
  }
  return count;
}

}  // namespace abelaut::oracle
