#include "glidekit/error.hpp"

namespace glidekit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidComposition: return "InvalidComposition";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kTooFewSlots: return "TooFewSlots";
    case ErrorCode::kWrongAtomShape: return "WrongAtomShape";
    case ErrorCode::kNotInPoset: return "NotInPoset";
    case ErrorCode::kNotInC: return "NotInC";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNotQuasisymmetric: return "NotQuasisymmetric";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kTupleTooLong: return "TupleTooLong";
    case ErrorCode::kInvalidRing: return "InvalidRing";
    case ErrorCode::kNotGrassmannian: return "NotGrassmannian";
    case ErrorCode::kNotSemistandard: return "NotSemistandard";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace glidekit
