#pragma once

// Recovering the modulus m from a repetend, given either as an integer or
// as a digit string with significant leading zeros.

#include "repetend/expansion.hpp"
#include "repetend/natural.hpp"
#include "repetend/numtheory.hpp"

#include <cstdint>

namespace repetend {

struct ReconstructionResult {
  std::uint64_t base = 0;
  /// Value of the padded string.
  Natural a;
  DigitString padded_string;
  /// Padded length; a * m = base^l - 1.
  std::uint64_t l = 0;
  Natural m;
  /// O_m(base); always divides l.
  Natural order_of_base_mod_m;
  /// m <= 1: no nontrivial modulus corresponds.
  bool collapsed = false;

  bool order_equals_length() const { return order_of_base_mod_m == l; }
};

/// l = O_a(base), a padded to l digits, m = (base^l - 1)/a.
/// Throws not-coprime unless gcd(a, base) = 1.
ReconstructionResult reconstruct_from_integer(const Natural& a, std::uint64_t base,
                                              const OrderOptions& options = {});

/// Keeps the length of s: m = (base^l - 1)/value(s) with l = |s|.
/// Throws not-coprime when the last digit shares a factor with the base,
/// reducible-string when s repeats a shorter block, and no-modulus when
/// value(s) does not divide base^l - 1.
ReconstructionResult reconstruct_from_string(const DigitString& s,
                                             const OrderOptions& options = {});

}  // namespace repetend
