#include "repetend/natural.hpp"

#include "repetend/error.hpp"

#include <algorithm>
#include <cctype>

namespace repetend {

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(ErrorKind::InvalidInput,
                "expected a nonnegative decimal integer, got '" + std::string(text) + "'");
  }
  return Natural(std::string(text), 10);
}

std::string to_decimal(const Natural& value) { return value.get_str(10); }

std::uint64_t to_u64(const Natural& value) {
  if (!fits_u64(value)) {
    throw Error(ErrorKind::InvalidInput, "value " + to_decimal(value) + " exceeds 64 bits");
  }
  // mpz_get_ui is unsigned long, which is 64 bits on every supported target.
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_get_ui(value.get_mpz_t());
}

Natural power(const Natural& base, std::uint64_t exponent) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace repetend
