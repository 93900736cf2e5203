#pragma once

#include <stdexcept>
#include <string>

namespace spinrev {

// Numeric values are mirrored by sr_status in spinrev.h.
enum class ErrorCode {
  InvalidArgument = 1,
  Resource = 2,
  NotASignedPermutation = 3,
  NotAPauliString = 4,
  Convergence = 5,
  Degenerate = 6,
  Internal = 99,
};

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

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace spinrev
