#pragma once

#include <stdexcept>
#include <string>

namespace caecc {

// Machine-readable failure codes. The CLI serializes these verbatim into
// {"code": "...", "message": "..."} on stderr, so the token strings are part
// of the external interface and must stay stable.
enum class ErrorCode {
  NONPOSITIVE_PARAM,
  W_NOT_LESS_THAN_N,
  E_EXCEEDS_W,
  T_EXCEEDS_M,
  M_EXCEEDS_P,
  RANK_OUT_OF_RANGE,
  EMPTY_COSET,
  DIVISION_BY_ZERO,
  MODULUS_MISMATCH,
  TOO_MANY_ERASURES,
  INCONSISTENT_CODEWORD,
  LOCATOR_ROOT_MISMATCH,
  ENCODER_REQUIRES_PRIME_N,
  UNSUPPORTED_VARIANT,
  PAYLOAD_LENGTH_MISMATCH,
  PATTERN_INVALID_FOR_WORD,
  TOO_LARGE_FOR_EXACT_COUNT,
  TOO_LARGE_FOR_ENUMERATION,
  ODD_E_UNSUPPORTED_BY_FORMULA,
  BAD_FORMAT,
  IO_ERROR,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NONPOSITIVE_PARAM: return "NONPOSITIVE_PARAM";
    case ErrorCode::W_NOT_LESS_THAN_N: return "W_NOT_LESS_THAN_N";
    case ErrorCode::E_EXCEEDS_W: return "E_EXCEEDS_W";
    case ErrorCode::T_EXCEEDS_M: return "T_EXCEEDS_M";
    case ErrorCode::M_EXCEEDS_P: return "M_EXCEEDS_P";
    case ErrorCode::RANK_OUT_OF_RANGE: return "RANK_OUT_OF_RANGE";
    case ErrorCode::EMPTY_COSET: return "EMPTY_COSET";
    case ErrorCode::DIVISION_BY_ZERO: return "DIVISION_BY_ZERO";
    case ErrorCode::MODULUS_MISMATCH: return "MODULUS_MISMATCH";
    case ErrorCode::TOO_MANY_ERASURES: return "TOO_MANY_ERASURES";
    case ErrorCode::INCONSISTENT_CODEWORD: return "INCONSISTENT_CODEWORD";
    case ErrorCode::LOCATOR_ROOT_MISMATCH: return "LOCATOR_ROOT_MISMATCH";
    case ErrorCode::ENCODER_REQUIRES_PRIME_N: return "ENCODER_REQUIRES_PRIME_N";
    case ErrorCode::UNSUPPORTED_VARIANT: return "UNSUPPORTED_VARIANT";
    case ErrorCode::PAYLOAD_LENGTH_MISMATCH: return "PAYLOAD_LENGTH_MISMATCH";
    case ErrorCode::PATTERN_INVALID_FOR_WORD: return "PATTERN_INVALID_FOR_WORD";
    case ErrorCode::TOO_LARGE_FOR_EXACT_COUNT: return "TOO_LARGE_FOR_EXACT_COUNT";
    case ErrorCode::TOO_LARGE_FOR_ENUMERATION: return "TOO_LARGE_FOR_ENUMERATION";
    case ErrorCode::ODD_E_UNSUPPORTED_BY_FORMULA: return "ODD_E_UNSUPPORTED_BY_FORMULA";
    case ErrorCode::BAD_FORMAT: return "BAD_FORMAT";
    case ErrorCode::IO_ERROR: return "IO_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) raise(code, message);
}

}  // namespace caecc
