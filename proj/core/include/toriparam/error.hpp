#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toriparam {

enum class ErrorCode {
  ZeroVector,
  DimensionMismatch,
  NotFullDimensional,
  UnsupportedDimension,
  InvalidPolytope,
  PointOutsidePolytope,
  NotInSupport,
  VariableCountMismatch,
  NotUnivariate,
  ZeroPolynomial,
  SyntaxError,
  ZeroScalar,
  LengthMismatch,
  NotARefinement,
  NoPreimage,
  NotMonomialSystem,
  MultiParameterUnsupported,
  IncompleteHints,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception; code() tells
// callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace toriparam
