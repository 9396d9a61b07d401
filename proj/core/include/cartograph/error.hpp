#pragma once

#include <stdexcept>
#include <string>

namespace cartograph {

enum class ErrorKind {
  InvalidVertexId,
  DuplicateVertex,
  UnknownVertex,
  ParallelEdge,
  LoopDisallowed,
  NonFiniteWeight,
  EmptyUniverse,
  PositionOutOfRange,
  MissingWeight,
  UnknownEdge,
  DuplicateEdge,
  MissingEdge,
  NotAPermutation,
  OrderingMismatch,
  KindMismatch,
  ParseError,
  InvalidOption,
  IoError,
};

const char* to_string(ErrorKind kind) noexcept;

/// All library failures are reported as this exception; `kind()` stays
/// machine-checkable while `what()` carries the human diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cartograph
