#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mingens {

// Base of every error raised by the library. Callers that only care about
// "something went wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// |K| <= d: no unisolvent point set of degree d exists over K.
class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, std::uint64_t trials_used)
      : Error(what), trials_used_(trials_used) {}
  std::uint64_t trials_used() const noexcept { return trials_used_; }

 private:
  std::uint64_t trials_used_;
};

// x^m == y^m for some 1 <= m <= d in the two-variable triangle construction.
class PowerCollision : public Error {
 public:
  explicit PowerCollision(unsigned m)
      : Error("x^m == y^m for m = " + std::to_string(m)), exponent_(m) {}
  unsigned exponent() const noexcept { return exponent_; }

 private:
  unsigned exponent_;
};

class OrderTooSmall : public Error {
 public:
  using Error::Error;
};

class OracleCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mingens
