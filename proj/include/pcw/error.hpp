#ifndef PCW_ERROR_HPP
#define PCW_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcw {

// Domain errors raised by the library. The CLI maps these to exit code 1.
enum class ErrorKind {
  EmptyWord,
  NonPrimitive,
  NonPrimitiveNecklace,
  MultipleCycles,
  LetterOutOfRange,
  BadDimension,
  InvalidGVector,
  InvalidWalk,
  InvalidComponent,
  ZeroLambda,
  DimensionMismatch,
  NotInHyperplane,
  NotABrick,
  GenericityViolation,
  InternalInconsistency,
  AllZero,
  InvalidModule,
};

std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcw

#endif  // PCW_ERROR_HPP
