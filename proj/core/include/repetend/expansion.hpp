#pragma once

// Base-n expansion of 1/m: digit strings, their values, periodicity.

#include "repetend/natural.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repetend {

using Digit = std::uint64_t;

/// A finite string of base-n digits. Leading zeros are significant: (0,9)
/// and (9) are different strings.
class DigitString {
 public:
  /// Throws invalid-input when base < 2, digits is empty, or a digit >= base.
  DigitString(std::uint64_t base, std::vector<Digit> digits);
  /// The one-digit string (0) in base 2.
  DigitString() : base_(2), digits_{0} {}

  /// Natural digits of `value`, left-padded with zeros to `length`.
  /// Throws overflow-of-target-length if value >= base^length.
  static DigitString from_natural(const Natural& value, std::uint64_t base, std::size_t length);

  /// Natural digits of `value` without padding; "0" for zero.
  static DigitString from_natural(const Natural& value, std::uint64_t base);

  /// Parses the comma-separated wire form, e.g. "0,0,1,1".
  static DigitString parse(std::string_view text, std::uint64_t base);

  std::uint64_t base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  /// Comma-separated decimal digit values.
  std::string to_wire() const;

  bool operator==(const DigitString&) const = default;

 private:
  std::uint64_t base_;
  std::vector<Digit> digits_;
};

/// Rational in lowest terms.
class ExactFraction {
 public:
  /// Throws invalid-input for a zero denominator.
  ExactFraction(Natural numerator, Natural denominator);

  const Natural& numerator() const noexcept { return numerator_; }
  const Natural& denominator() const noexcept { return denominator_; }
  std::string to_string() const;

  bool operator==(const ExactFraction&) const = default;

 private:
  Natural numerator_;
  Natural denominator_;
};

/// One period of the base-n expansion of 1/m.
class Expansion {
 public:
  Expansion(Natural m, std::uint64_t base, DigitString repetend);

  const Natural& modulus() const noexcept { return m_; }
  std::uint64_t base() const noexcept { return repetend_.base(); }
  /// O_m(base): the repetend length.
  std::uint64_t period() const noexcept { return repetend_.size(); }
  const DigitString& repetend() const noexcept { return repetend_; }

  /// a_k(m) for k >= 1, looked up modulo the period.
  Digit digit(std::uint64_t k) const;

 private:
  Natural m_;
  DigitString repetend_;
};

/// Longest repetend expand() will hold in memory.
inline constexpr std::size_t kMaxExpansionDigits = std::size_t{1} << 30;

/// Exact long division of 1 by m until the remainder returns to 1.
/// Throws order-budget-exceeded past kMaxExpansionDigits digits.
Expansion expand(const Natural& m, std::uint64_t base);

/// a_k(m) = (n [n^(k-1)]_m - [n^k]_m) / m, from residues alone.
Digit digit_via_residues(const Natural& m, std::uint64_t base, const Natural& k);

/// Integer whose base-n digits are the string, leading zeros dropped.
Natural string_value(const DigitString& s);

/// string_value(s) / (base^l - 1) in lowest terms; zero-value for all-zero s.
ExactFraction repeating_value(const DigitString& s);

/// Smallest k >= 0 with base^k >= m, by integer comparison only.
std::uint64_t ceil_log(const Natural& m, std::uint64_t base);

/// Index of the first nonzero digit of 1/m. Internally checked against
/// ceil_log(m, base).
std::uint64_t first_nonzero_index(const Natural& m, std::uint64_t base);

/// (base^O_m(base) - 1) / m.
Natural quotient_value(const Natural& m, std::uint64_t base);

/// Smallest d | l such that the string is (l/d) copies of its first d digits.
std::size_t minimal_word_period(std::span<const Digit> digits);
inline std::size_t minimal_word_period(const DigitString& s) {
  return minimal_word_period(s.digits());
}

struct PeriodicityVerdict {
  bool periodic = false;
  std::uint64_t minimal_period = 0;

  bool operator==(const PeriodicityVerdict&) const = default;
};

/// Minimal word period of a padded to l digits, read off the digits.
std::uint64_t period_by_digit_pattern(const Natural& a, std::uint64_t l, std::uint64_t base);

/// Smallest d | l with (base^l - 1)/(base^d - 1) dividing a; l if none.
std::uint64_t period_by_divisibility(const Natural& a, std::uint64_t l, std::uint64_t base);

/// Pads a to l digits and decides periodicity. Both criteria are evaluated;
/// disagreement raises internal-inconsistency.
PeriodicityVerdict is_periodic_padded(const Natural& a, std::uint64_t l, std::uint64_t base);

}  // namespace repetend
