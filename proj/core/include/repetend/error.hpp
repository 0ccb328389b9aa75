#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repetend {

enum class ErrorKind {
  InvalidModulus,
  InvalidInput,
  NotCoprime,
  FactorizationBudgetExceeded,
  OrderBudgetExceeded,
  ZeroValue,
  TargetLengthOverflow,
  NotApplicable,
  Precondition,
  ReducibleString,
  NoModulus,
  InternalInconsistency,
};

/// Stable kebab-case identifier, used on the CLI wire.
std::string_view error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace repetend
