#include "pcw/error.hpp"

namespace pcw {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::NonPrimitiveNecklace: return "NonPrimitiveNecklace";
    case ErrorKind::MultipleCycles: return "MultipleCycles";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::InvalidGVector: return "InvalidGVector";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::InvalidComponent: return "InvalidComponent";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInHyperplane: return "NotInHyperplane";
    case ErrorKind::NotABrick: return "NotABrick";
    case ErrorKind::GenericityViolation: return "GenericityViolation";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::InvalidModule: return "InvalidModule";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace pcw
