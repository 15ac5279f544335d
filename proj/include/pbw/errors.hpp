#pragma once

#include <stdexcept>
#include <string>

namespace pbw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A presentation, automorphism or derivation failed a validation tier.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

/// A structure scalar that must be a unit turned out to be zero.
class NDependenceViolation : public Error {
 public:
  using Error::Error;
};

/// A relation does not have the zero pattern needed to move inverses.
class UnsupportedRelation : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class ZeroElement : public Error {
 public:
  ZeroElement() : Error("zero element has no leading term") {}
};

class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

/// Raised by classification; carries the (1-based) pair that failed.
class NotClassifiable : public Error {
 public:
  NotClassifiable(int i, int j, const std::string& why)
      : Error("not classifiable at pair (" + std::to_string(i) + "," +
              std::to_string(j) + "): " + why),
        i_(i),
        j_(j) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

 private:
  int i_;
  int j_;
};

class AllCommutatorsZero : public Error {
 public:
  AllCommutatorsZero() : Error("every generator commutator vanishes") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : Error("syntax error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name) : Error("unknown symbol '" + name + "'") {}
};

class UnknownExample : public Error {
 public:
  explicit UnknownExample(const std::string& key) : Error("unknown example '" + key + "'") {}
};

class InvalidOptions : public Error {
 public:
  using Error::Error;
};

}  // namespace pbw
