#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stabkit {

enum class ErrorCode {
  ZeroVector,
  ZeroForm,
  EmptySet,
  BadIndex,
  BadShape,
  NotPositiveDefinite,
  ZeroOneParamSubgroup,
  WrongAmbient,
  ArityMismatch,
  InvalidIndex,
  NotWeylInvariant,
  NotNilpotent,
  NotASlice,
  NotHomogeneous,
  InvalidGrading,
  NoPositivePart,
  NotInAttractingSet,
  MissingResidualTorus,
  Unstable,
  ParseError,
  UnsupportedFormat,
  DivisionByZero,
  UnsupportedQuery,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace stabkit
