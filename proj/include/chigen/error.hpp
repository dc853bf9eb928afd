#pragma once

#include <stdexcept>
#include <string>

namespace chigen {

// Failure categories surfaced to callers and mapped to CLI exit codes.
// kName / kind() let callers branch without string matching.
enum class ErrorKind {
  InvalidSpec,
  ParseError,
  OrderCapExceeded,
  LatticeCapExceeded,
  LatticeIncomplete,
  NotSubgroup,
  NotNormal,
  NotProperSubgroup,
  NotAbelian,
  NotNilpotent,
  NotPrime,
  TrivialGroup,
  BudgetExceeded,
  CapExceeded,
  Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // true for input-shaped failures (bad spec text or parameters)
  bool is_user_error() const {
    return kind_ == ErrorKind::InvalidSpec || kind_ == ErrorKind::ParseError;
  }

  // true when a configured resource cap or budget stopped the computation
  bool is_cap_error() const {
    switch (kind_) {
      case ErrorKind::OrderCapExceeded:
      case ErrorKind::LatticeCapExceeded:
      case ErrorKind::LatticeIncomplete:
      case ErrorKind::BudgetExceeded:
      case ErrorKind::CapExceeded:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace chigen
