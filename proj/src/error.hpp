#pragma once

#include <stdexcept>
#include <string>

namespace lmgdtc {

enum class ErrorCode {
  InvalidArgument = 1,
  OutOfRange = 2,
  Io = 3,
  Mismatch = 4,
};

// All failures raised by the core carry one of the codes above so the C
// boundary can translate them without string matching.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace lmgdtc
