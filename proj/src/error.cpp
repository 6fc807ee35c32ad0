#include "fvol/error.hpp"

namespace fvol {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BadLevel: return "BadLevel";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotPrimary: return "NotPrimary";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
  }
  return "Unknown";
}

}  // namespace fvol
