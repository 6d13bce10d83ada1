// abelaut: automorphism counts and |Aut(G)|/|G| ratios of finite abelian
// groups from the command line.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "abelaut/abelaut.hpp"

namespace {

using namespace abelaut;
using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBound = 2;
constexpr int kExitMismatch = 3;

std::string class_tags(const GroupShape& g) {
  if (g.is_trivial()) return "Trivial";
  std::string out;
  for (const auto& [p, part] : g.factors()) {
    if (!out.empty()) out += ";";
    out += std::to_string(p) + ":" + to_string(classify(part));
  }
  return out;
}

class Printer {
 public:
  explicit Printer(Format format) : format_(format) {}

  /// One record in the shared column layout.
  void group_row(const std::optional<std::uint64_t>& order, const GroupShape& g) {
    const BigInt aut = aut_order(g);
    const Rational r = ratio(g);
    const std::string num = boost::multiprecision::numerator(r).str();
    const std::string den = boost::multiprecision::denominator(r).str();
    const std::string ord = order ? std::to_string(*order) : g.order().str();
    switch (format_) {
      case Format::Text:
        std::cout << ord << '\t' << to_string(g) << '\t' << aut.str() << '\t'
                  << to_string(r) << '\t' << class_tags(g) << '\n';
        break;
      case Format::Json: {
        ordered_json j;
        j["order"] = ord;
        j["group"] = to_string(g);
        j["aut_order"] = aut.str();
        j["ratio_num"] = num;
        j["ratio_den"] = den;
        j["class"] = class_tags(g);
        std::cout << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        header({"order", "group", "aut_order", "ratio_num", "ratio_den", "class"});
        std::cout << ord << ',' << to_string(g) << ',' << aut.str() << ',' << num
                  << ',' << den << ',' << class_tags(g) << '\n';
        break;
    }
  }

  /// A record with a custom column set; text mode prints `text`.
  void record(const ordered_json& fields, const std::string& text) {
    switch (format_) {
      case Format::Text:
        std::cout << text << '\n';
        break;
      case Format::Json:
        std::cout << fields.dump() << '\n';
        break;
      case Format::Csv: {
        std::vector<std::string> names;
        for (auto it = fields.begin(); it != fields.end(); ++it) names.push_back(it.key());
        header(names);
        bool first = true;
        for (const auto& v : fields) {
          if (!first) std::cout << ',';
          first = false;
          std::cout << (v.is_string() ? v.get<std::string>() : v.dump());
        }
        std::cout << '\n';
        break;
      }
    }
  }

 private:
  void header(const std::vector<std::string>& names) {
    if (header_done_) return;
    header_done_ = true;
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::cout << (i ? "," : "") << names[i];
    }
    std::cout << '\n';
  }

  Format format_;
  bool header_done_ = false;
};

std::string verdict_text(const SearchVerdict& v) {
  if (const auto* w = std::get_if<Witness>(&v)) {
    return "Witness " + to_string(w->group) + " (order " + std::to_string(w->order) +
           ")";
  }
  if (const auto* u = std::get_if<Unrealizable>(&v)) {
    return "Unrealizable(" + to_string(u->reason) + ")";
  }
  const auto& n = std::get<NotFoundWithinBounds>(v);
  return "NotFoundWithinBounds(" + std::to_string(n.max_order_searched) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism group orders of finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::Text;
  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));

  std::string group_text;
  std::string target_text;
  std::uint64_t max_order = 10'000;
  std::uint64_t budget = 1'000'000;
  std::uint64_t prime = 0;
  std::optional<double> time_limit;

  auto* aut = app.add_subcommand("aut", "Print |Aut(G)|");
  aut->add_option("group", group_text, "Group, e.g. Z2xZ3xZ9")->required();

  auto* rat = app.add_subcommand("ratio", "Print |Aut(G)|/|G| as a/b");
  rat->add_option("group", group_text)->required();

  auto* cls = app.add_subcommand("classify", "Classify each p-part");
  cls->add_option("group", group_text)->required();

  auto* val = app.add_subcommand("valuation", "p-adic valuation of |Aut(G)|");
  val->add_option("group", group_text)->required();
  val->add_option("-p", prime, "Prime")->required();

  auto* enu = app.add_subcommand("enumerate", "Stream all groups up to an order");
  enu->add_option("--max-order", max_order)->check(CLI::PositiveNumber);

  auto* sea = app.add_subcommand("search", "Find a group with a given ratio");
  sea->add_option("target", target_text, "Rational a/b or integer")->required();
  sea->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  sea->add_option("--time-limit", time_limit, "Seconds")->check(CLI::NonNegativeNumber);

  auto* atl = app.add_subcommand("atlas", "All ratios up to an order");
  atl->add_option("--max-order", max_order)->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "Check the formula against brute force");
  ver->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  ver->add_option("--budget", budget, "Oracle candidate-tuple budget")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Printer out(format);
  try {
    if (*aut) {
      const GroupShape g = parse_group(group_text);
      if (format == Format::Text) {
        std::cout << aut_order(g).str() << '\n';
      } else {
        out.group_row(std::nullopt, g);
      }
    } else if (*rat) {
      const GroupShape g = parse_group(group_text);
      if (format == Format::Text) {
        std::cout << to_string(ratio(g)) << '\n';
      } else {
        out.group_row(std::nullopt, g);
      }
    } else if (*cls) {
      const GroupShape g = parse_group(group_text);
      if (g.is_trivial()) {
        out.record({{"prime", nullptr}, {"group", "Z1"}, {"class", "Trivial"}},
                   "trivial group");
      }
      for (const auto& [p, part] : g.factors()) {
        const auto c = classify(part);
        const auto closed = closed_form_ratio(c, p);
        std::string closed_text = "integer divisible by p(p-1)^2";
        if (const auto* r = std::get_if<Rational>(&closed)) closed_text = to_string(*r);
        out.record({{"prime", p},
                    {"group", to_string(part)},
                    {"class", to_string(c)},
                    {"closed_form", closed_text}},
                   std::to_string(p) + ": " + to_string(part) + "  " + to_string(c) +
                       "  ratio " + closed_text);
      }
    } else if (*val) {
      if (!is_prime(prime)) {
        std::cerr << "error: " << prime << " is not prime\n";
        return kExitUsage;
      }
      const GroupShape g = parse_group(group_text);
      const auto it = g.factors().find(prime);
      if (it == g.factors().end()) {
        std::cerr << "error: " << to_string(g) << " has no " << prime << "-part\n";
        return kExitUsage;
      }
      const ValuationParts v = p_valuation_of_aut(it->second);
      out.record({{"prime", prime},
                  {"group", to_string(it->second)},
                  {"n", v.n},
                  {"d", v.d},
                  {"c", v.c},
                  {"total", v.total}},
                 "n=" + std::to_string(v.n) + " d=" + std::to_string(v.d) +
                     " c=" + std::to_string(v.c) + " total=" + std::to_string(v.total));
    } else if (*enu) {
      for (auto&& [order, g] : groups_up_to(max_order)) out.group_row(order, g);
    } else if (*sea) {
      const Rational target = parse_rational(target_text);
      SearchBounds bounds;
      bounds.max_order = max_order;
      if (time_limit) bounds.time_limit = std::chrono::duration<double>(*time_limit);
      const SearchVerdict v = realize(target, bounds);
      ordered_json j;
      j["target"] = to_string(target);
      if (const auto* w = std::get_if<Witness>(&v)) {
        j["verdict"] = "Witness";
        j["group"] = to_string(w->group);
        j["order"] = w->order;
      } else if (const auto* u = std::get_if<Unrealizable>(&v)) {
        j["verdict"] = "Unrealizable";
        j["reason"] = to_string(u->reason);
      } else {
        j["verdict"] = "NotFoundWithinBounds";
        j["max_order_searched"] = std::get<NotFoundWithinBounds>(v).max_order_searched;
      }
      out.record(j, verdict_text(v));
    } else if (*atl) {
      SearchBounds bounds;
      bounds.max_order = max_order;
      for (const auto& [r, w] : ratio_atlas(bounds, jobs)) {
        out.record({{"ratio_num", boost::multiprecision::numerator(r).str()},
                    {"ratio_den", boost::multiprecision::denominator(r).str()},
                    {"order", w.order},
                    {"group", to_string(w.group)}},
                   to_string(r) + '\t' + std::to_string(w.order) + '\t' +
                       to_string(w.group));
      }
    } else if (*ver) {
      const VerifyReport report =
          verify_formula(max_order, oracle::OracleBudget{budget}, jobs);
      for (const auto& m : report.mismatches) {
        out.record({{"status", "MISMATCH"},
                    {"group", to_string(m.shape)},
                    {"formula", m.formula.str()},
                    {"oracle", m.oracle.str()}},
                   "MISMATCH " + to_string(m.shape) + " formula=" + m.formula.str() +
                       " oracle=" + m.oracle.str());
      }
      out.record({{"status", report.ok() ? "ok" : "MISMATCH"},
                  {"groups_passed", report.groups_passed},
                  {"groups_skipped", report.groups_skipped},
                  {"groups_mismatched", report.groups_mismatched},
                  {"shapes_checked", report.shapes_checked},
                  {"shapes_skipped", report.shapes_skipped}},
                 std::string(report.ok() ? "ok" : "MISMATCH") +
                     ": groups passed=" + std::to_string(report.groups_passed) +
                     " skipped=" + std::to_string(report.groups_skipped) +
                     " mismatched=" + std::to_string(report.groups_mismatched) +
                     "; shapes checked=" + std::to_string(report.shapes_checked) +
                     " skipped=" + std::to_string(report.shapes_skipped));
      if (!report.ok()) return kExitMismatch;
    }
  } catch (const FactorizationOverflow& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
