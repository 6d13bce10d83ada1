#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "abelaut/error.hpp"
#include "abelaut/number_theory.hpp"
#include "abelaut/shape.hpp"

// Text forms for groups and ratios.
//
//   group    := factor (sep factor)*
//   factor   := ('Z' | 'C') digits
//   sep      := 'x' | '*'
//
// Case-insensitive, whitespace anywhere is ignored.

namespace abelaut {

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek_lower() {
    skip_space();
    if (pos_ >= text_.size()) return '\0';
    return static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_])));
  }

  void advance() { ++pos_; }
  std::size_t pos() const { return pos_; }

  /// Decimal digits, whitespace allowed between them.
  std::string digits() {
    skip_space();
    std::string out;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        out.push_back(ch);
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        break;
      }
      ++pos_;
    }
    if (out.empty()) throw ParseError("expected a decimal number", pos_);
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::uint64_t to_modulus(const std::string& digits) {
  const BigInt value(digits);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw FactorizationOverflow("modulus " + digits + " is too large to factor");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace detail

inline std::vector<std::uint64_t> parse_moduli(std::string_view text) {
  detail::Scanner in(text);
  std::vector<std::uint64_t> moduli;
  if (in.at_end()) throw ParseError("empty group expression", 0);
  for (;;) {
    const char head = in.peek_lower();
    if (head != 'z' && head != 'c') {
      throw ParseError("expected a factor 'Z<n>' or 'C<n>'", in.pos());
    }
    in.advance();
    const std::size_t at = in.pos();
    const std::uint64_t m = detail::to_modulus(in.digits());
    if (m < 1) throw ParseError("cyclic factor order must be at least 1", at);
    moduli.push_back(m);
    if (in.at_end()) break;
    const char sep = in.peek_lower();
    if (sep != 'x' && sep != '*') {
      throw ParseError("expected 'x' or '*' between factors", in.pos());
    }
    in.advance();
    if (in.at_end()) throw ParseError("dangling separator", in.pos());
  }
  return moduli;
}

inline GroupShape parse_group(std::string_view text, const FactorBound& bound = {}) {
  return canonicalize(parse_moduli(text), bound);
}

/// Canonical form `Z2 x Z3 x Z9`; the trivial group prints as `Z1`.
inline std::string to_string(const GroupShape& group) {
  if (group.is_trivial()) return "Z1";
  std::string out;
  for (const auto& m : group.moduli()) {
    if (!out.empty()) out += " x ";
    out += "Z" + m.str();
  }
  return out;
}

inline std::string to_string(const PGroupShape& shape) {
  return to_string(GroupShape({shape}));
}

/// `a/b` or a bare integer, reduced on parse. Only positive values.
inline Rational parse_rational(std::string_view text) {
  detail::Scanner in(text);
  if (in.at_end()) throw ParseError("empty rational", 0);
  if (in.peek_lower() == '-') throw ParseError("ratio must be positive", in.pos());
  if (in.peek_lower() == '+') in.advance();
  const BigInt num(in.digits());
  BigInt den = 1;
  if (!in.at_end()) {
    if (in.peek_lower() != '/') throw ParseError("expected '/'", in.pos());
    in.advance();
    const std::size_t at = in.pos();
    den = BigInt(in.digits());
    if (den == 0) throw ParseError("zero denominator", at);
  }
  if (!in.at_end()) throw ParseError("trailing characters", in.pos());
  if (num == 0) throw ParseError("ratio must be positive", 0);
  return Rational(num, den);
}

}  // namespace abelaut
