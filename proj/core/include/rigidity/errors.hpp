#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rigidity {

enum class ErrorKind {
  InvalidInput,
  OutOfRange,
  NonSimple,
  NotSphere,
  BadIntersection,
  InvariantViolation,
  NotFound,
  FacetNotBeltSurrounded,
  MalformedEdgeRun,
  NotCharacteristic,
  DimensionMismatch,
  LiftFailed,
  SizeGuard,
  InternalMismatch,
  BasisMismatch,
  ModeUnsupported,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace rigidity
