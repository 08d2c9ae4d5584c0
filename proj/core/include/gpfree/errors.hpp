#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpfree {

enum class ErrorKind {
  kNonSquarefree,
  kInvalidD,
  kNotPrime,
  kDomainError,
  kConsistencyError,
  kNotClassNumberOne,
  kNotImaginary,
  kLimitExceeded,
  kNoPreset,
  kParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure raised by the library. The kind is stable and is what
// callers (and the CLI exit-code mapping) should switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpfree
