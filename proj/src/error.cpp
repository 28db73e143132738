#include "centauts/error.hpp"

namespace centauts {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::PrimeMismatch: return "PrimeMismatch";
    case ErrorKind::WrongClass: return "WrongClass";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotPurelyNonabelian: return "NotPurelyNonabelian";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace centauts
