#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace repetend {

/// Exact nonnegative integer. All arithmetic in the library goes through
/// this type; nothing is ever rounded.
using Natural = mpz_class;

/// Holds products of two 64-bit residues.
__extension__ using u128 = unsigned __int128;

/// Parses a decimal string of digits. Signs, whitespace and empty input are
/// rejected with an invalid-input error.
Natural parse_natural(std::string_view text);

std::string to_decimal(const Natural& value);

/// Converts to uint64; throws invalid-input when the value does not fit.
std::uint64_t to_u64(const Natural& value);

inline bool fits_u64(const Natural& value) {
  return sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

/// base^exponent, exact.
Natural power(const Natural& base, std::uint64_t exponent);

}  // namespace repetend
