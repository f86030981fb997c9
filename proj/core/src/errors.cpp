#include "rigidity/errors.hpp"

namespace rigidity {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonSimple: return "NonSimple";
    case ErrorKind::NotSphere: return "NotSphere";
    case ErrorKind::BadIntersection: return "BadIntersection";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::FacetNotBeltSurrounded: return "FacetNotBeltSurrounded";
    case ErrorKind::MalformedEdgeRun: return "MalformedEdgeRun";
    case ErrorKind::NotCharacteristic: return "NotCharacteristic";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LiftFailed: return "LiftFailed";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::ModeUnsupported: return "ModeUnsupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace rigidity
