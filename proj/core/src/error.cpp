#include "repetend/error.hpp"

namespace repetend {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NotCoprime: return "not-coprime";
    case ErrorKind::FactorizationBudgetExceeded: return "factorization-budget-exceeded";
    case ErrorKind::OrderBudgetExceeded: return "order-budget-exceeded";
    case ErrorKind::ZeroValue: return "zero-value";
    case ErrorKind::TargetLengthOverflow: return "overflow-of-target-length";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::ReducibleString: return "reducible-string";
    case ErrorKind::NoModulus: return "no-modulus";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
  }
  return "unknown";
}

}  // namespace repetend
