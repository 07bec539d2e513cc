#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zgcu {

enum class ErrorKind {
  InvalidInput,
  NotNormal,
  NotSubnormal,
  NotEligible,
  NotAUnit,
  GroupMismatch,
  SupportLeak,
  BoundExceeded,
  IndependenceUnresolved,
  VerificationFailure,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace zgcu
