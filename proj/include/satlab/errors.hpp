#ifndef SATLAB_ERRORS_HPP
#define SATLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid construction or operation parameters (q > n, u == v, ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Malformed graph6 input. `offset()` is the byte position of the fault.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An exact count left the representable range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A closed-form evaluator was called outside the region where it is defined.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Exhaustive search refused: too many vertices or time limit exceeded.
class BudgetError : public Error {
public:
  using Error::Error;
};

} // namespace satlab

#endif
