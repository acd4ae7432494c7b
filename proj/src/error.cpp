#include "kpalg/error.hpp"

namespace kpalg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::MissingSquare: return "MissingSquare";
    case ErrorKind::DuplicateSquare: return "DuplicateSquare";
    case ErrorKind::SquareEndpointMismatch: return "SquareEndpointMismatch";
    case ErrorKind::ConfluenceFailure: return "ConfluenceFailure";
    case ErrorKind::DanglingVertexRef: return "DanglingVertexRef";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::MalformedCycle: return "MalformedCycle";
    case ErrorKind::ShiftExceedsDegree: return "ShiftExceedsDegree";
    case ErrorKind::SourcefulGraph: return "SourcefulGraph";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::NotSaturatedHereditary: return "NotSaturatedHereditary";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotLocallyConvex: return "NotLocallyConvex";
    case ErrorKind::DegreeOrderViolation: return "DegreeOrderViolation";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::HasSources: return "HasSources";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::MT3Fails: return "MT3Fails";
    case ErrorKind::PreconditionsUnmet: return "PreconditionsUnmet";
    case ErrorKind::InvalidClass: return "InvalidClass";
  }
  return "Unknown";
}

}  // namespace kpalg
