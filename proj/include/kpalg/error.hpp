#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kpalg {

enum class ErrorKind {
  ParseError,
  UnknownIdentifier,
  DuplicateIdentifier,
  MissingSquare,
  DuplicateSquare,
  SquareEndpointMismatch,
  ConfluenceFailure,
  DanglingVertexRef,
  NotComposable,
  DegreeOutOfRange,
  MalformedCycle,
  ShiftExceedsDegree,
  SourcefulGraph,
  NotHereditary,
  NotSaturatedHereditary,
  EmptySet,
  NotLocallyConvex,
  DegreeOrderViolation,
  GraphMismatch,
  RingMismatch,
  NotHomogeneous,
  HasSources,
  ZeroElement,
  MT3Fails,
  PreconditionsUnmet,
  InvalidClass,
};

std::string_view to_string(ErrorKind kind);

/// All library failures surface as this exception; `kind()` is the
/// machine-readable reason and `what()` carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kpalg
