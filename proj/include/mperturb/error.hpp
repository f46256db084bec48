#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mperturb {

enum class ErrorKind {
  SingularMatrix,
  UpdateSingular,
  ZeroDiagonal,
  ZeroMarginal,
  DimensionMismatch,
  NotSymmetric,
  OrderOutOfRange,
  IndexOutOfRange,
  EmptyPerturbation,
  UnreachablePair,
  NotTridiagonal,
  BandwidthViolation,
  SingularSubmatrix,
  NotMonotone,
  NegativePerturbation,
  SingularIterate,
  InvalidParams,
  InvalidMatrix,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Mathematical or precondition failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed matrix file. line is 1-based; 0 means "not tied to a line".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mperturb
