#pragma once

#include <stdexcept>
#include <string>

namespace chromspec {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  NotConnected,
  CapExceeded,
  NoConvergence,
  Io,
  Verification,
};

// Every library failure is reported through this exception; the C API maps
// `code()` onto its status enum.
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

}  // namespace chromspec
