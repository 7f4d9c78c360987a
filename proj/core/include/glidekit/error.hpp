#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glidekit {

/// Stable machine-readable error codes. The spelling returned by
/// `error_code_name` is part of the CLI contract and must not change.
enum class ErrorCode {
  kInvalidComposition,
  kInvalidPartition,
  kLengthMismatch,
  kTooFewSlots,
  kWrongAtomShape,
  kNotInPoset,
  kNotInC,
  kOutOfRange,
  kNotQuasisymmetric,
  kUnknownLabel,
  kTupleTooLong,
  kInvalidRing,
  kNotGrassmannian,
  kNotSemistandard,
  kSizeMismatch,
  kTooLarge,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace glidekit
