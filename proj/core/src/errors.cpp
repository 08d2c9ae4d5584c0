#include "gpfree/errors.hpp"

namespace gpfree {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kNonSquarefree: return "NonSquarefree";
    case ErrorKind::kInvalidD: return "InvalidD";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kDomainError: return "DomainError";
    case ErrorKind::kConsistencyError: return "ConsistencyError";
    case ErrorKind::kNotClassNumberOne: return "NotClassNumberOne";
    case ErrorKind::kNotImaginary: return "NotImaginary";
    case ErrorKind::kLimitExceeded: return "LimitExceeded";
    case ErrorKind::kNoPreset: return "NoPreset";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace gpfree
