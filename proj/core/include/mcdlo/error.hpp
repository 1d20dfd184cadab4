#ifndef MCDLO_ERROR_HPP
#define MCDLO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcdlo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed values: unsorted point sets, ill-ordered intervals, points outside [0,1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax or signature violation while reading a formula.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluation failures: unbound variables, uninterpreted symbols, size caps.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcdlo

#endif  // MCDLO_ERROR_HPP
