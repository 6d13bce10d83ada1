#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abelaut/enumeration.hpp"
#include "abelaut/formula.hpp"
#include "abelaut/oracle.hpp"

namespace abelaut {

struct ShapeCheck {
  PGroupShape shape;
  BigInt formula;
  BigInt oracle;
};

struct VerifyReport {
  std::uint64_t groups_passed = 0;
  std::uint64_t groups_skipped = 0;
  std::uint64_t groups_mismatched = 0;
  std::uint64_t shapes_checked = 0;
  std::uint64_t shapes_skipped = 0;
  std::vector<ShapeCheck> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

namespace detail {

struct ShapeKey {
  Prime p;
  std::vector<int> exponents;
  friend auto operator<=>(const ShapeKey&, const ShapeKey&) = default;
};

enum class ShapeOutcome { Pass, Skip, Mismatch };

}  // namespace detail

/// Compares the closed-form |Aut| against the brute-force oracle for every
/// p-part of every group of order <= max_order. Each distinct p-group shape
/// is counted once; a group passes when all of its p-parts pass and is
/// skipped when any part exceeds the oracle budget.
inline VerifyReport verify_formula(std::uint64_t max_order,
                                   const oracle::OracleBudget& budget = {},
                                   unsigned workers = 1,
                                   const FactorBound& bound = {}) {
  std::map<detail::ShapeKey, detail::ShapeOutcome> outcomes;
  std::vector<PGroupShape> todo;
  for (auto&& [order, g] : groups_up_to(max_order, bound)) {
    for (const auto& [p, part] : g.factors()) {
      auto [it, fresh] = outcomes.try_emplace({p, part.exponents()},
                                              detail::ShapeOutcome::Skip);
      if (fresh) todo.push_back(part);
    }
  }

  VerifyReport report;
  workers = std::max(1u, workers);
  std::vector<std::future<std::vector<std::pair<std::size_t, ShapeCheck>>>> jobs;
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      std::vector<std::pair<std::size_t, ShapeCheck>> done;
      for (std::size_t i = w; i < todo.size(); i += workers) {
        if (!oracle::within_budget(todo[i], budget)) continue;
        done.push_back({i, ShapeCheck{todo[i], aut_order_p(todo[i]),
                                      oracle::count_automorphisms(todo[i], budget)}});
      }
      return done;
    }));
  }
  std::vector<std::pair<std::size_t, ShapeCheck>> all;
  for (auto& j : jobs) {
    auto part = j.get();
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (auto& [i, check] : all) {
    const bool agree = check.formula == check.oracle;
    outcomes[{check.shape.prime(), check.shape.exponents()}] =
        agree ? detail::ShapeOutcome::Pass : detail::ShapeOutcome::Mismatch;
    ++report.shapes_checked;
    if (!agree) report.mismatches.push_back(std::move(check));
  }
  report.shapes_skipped = todo.size() - report.shapes_checked;

  for (auto&& [order, g] : groups_up_to(max_order, bound)) {
    detail::ShapeOutcome worst = detail::ShapeOutcome::Pass;
    for (const auto& [p, part] : g.factors()) {
      const auto o = outcomes.at({p, part.exponents()});
      if (o == detail::ShapeOutcome::Mismatch) worst = o;
      else if (o == detail::ShapeOutcome::Skip && worst == detail::ShapeOutcome::Pass)
        worst = o;
    }
    switch (worst) {
      case detail::ShapeOutcome::Pass: ++report.groups_passed; break;
      case detail::ShapeOutcome::Skip: ++report.groups_skipped; break;
      case detail::ShapeOutcome::Mismatch: ++report.groups_mismatched; break;
    }
  }
  return report;
}

}  // namespace abelaut
