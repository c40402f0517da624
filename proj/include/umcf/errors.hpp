#pragma once

#include <stdexcept>
#include <string>

namespace umcf {

enum class ErrorCode {
  invalid_argument,  // bad parameter / precondition violation
  domain,            // scalar function evaluated outside its domain
  spectral,          // invalid spectral data (non-Hermitian input, ...)
  geometry,          // degenerate or empty shape
  parse,             // config text errors
  io,                // file read/write failures
  diverged,          // non-finite state during time stepping
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace umcf
