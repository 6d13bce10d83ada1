#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abelaut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidModulus : public Error {
 public:
  using Error::Error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

/// A modulus or target is too large to be factored by trial division
/// within the configured bound.
class FactorizationOverflow : public Error {
 public:
  using Error::Error;
};

/// The oracle was asked to enumerate more candidate tuples than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace abelaut
