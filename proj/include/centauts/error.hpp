#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace centauts {

enum class ErrorKind {
  NotAGroup,
  SizeLimitExceeded,
  NotNormal,
  NotNilpotent,
  NotPGroup,
  NotAbelian,
  PrimeMismatch,
  WrongClass,
  HypothesisViolated,
  BudgetExceeded,
  InternalDisagreement,
  NotCentral,
  NotPurelyNonabelian,
  ParseError,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the scanner,
// the CLI, the Python layer) can classify it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace centauts
