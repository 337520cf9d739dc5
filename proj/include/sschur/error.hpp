#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sschur {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  enum class Kind { NotStrictlyDecreasing, NotWeaklyDecreasing, NegativePart, ZeroSymmetricPart, BadDiagram };
  ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Raised when an x-only argument was expected but theta content was found.
class OddInputRejected : public Error {
 public:
  using Error::Error;
};

class IncompleteBasis : public Error {
 public:
  using Error::Error;
};

class UnknownOperator : public Error {
 public:
  using Error::Error;
};

class BidegreeOverflow : public Error {
 public:
  using Error::Error;
};

class SingularGram : public Error {
 public:
  using Error::Error;
};

}  // namespace sschur
