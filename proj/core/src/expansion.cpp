#include "repetend/expansion.hpp"

#include "repetend/error.hpp"
#include "repetend/numtheory.hpp"

#include <algorithm>
#include <charconv>

namespace repetend {

namespace {

void require_base(std::uint64_t base) {
  if (base < 2) {
    throw Error(ErrorKind::InvalidInput, "base must be at least 2, got " + std::to_string(base));
  }
}

void require_modulus_at_least_2(const Natural& m) {
  if (m < 2) {
    throw Error(ErrorKind::InvalidInput, "modulus must be at least 2, got " + to_decimal(m));
  }
}

std::vector<Digit> natural_digits(Natural value, std::uint64_t base) {
  std::vector<Digit> out;
  if (sgn(value) == 0) return {0};
  while (sgn(value) > 0) {
    out.push_back(mpz_fdiv_q_ui(value.get_mpz_t(), value.get_mpz_t(), base));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

DigitString::DigitString(std::uint64_t base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits)) {
  require_base(base_);
  if (digits_.empty()) throw Error(ErrorKind::InvalidInput, "digit string must not be empty");
  for (const auto d : digits_) {
    if (d >= base_) {
      throw Error(ErrorKind::InvalidInput, "digit " + std::to_string(d) +
                                               " out of range for base " + std::to_string(base_));
    }
  }
}

DigitString DigitString::from_natural(const Natural& value, std::uint64_t base,
                                      std::size_t length) {
  require_base(base);
  if (length == 0) throw Error(ErrorKind::InvalidInput, "target length must be positive");
  if (value >= power(Natural(base), length)) {
    throw Error(ErrorKind::TargetLengthOverflow,
                to_decimal(value) + " has more than " + std::to_string(length) + " base-" +
                    std::to_string(base) + " digits");
  }
  auto digits = sgn(value) == 0 ? std::vector<Digit>{} : natural_digits(value, base);
  digits.insert(digits.begin(), length - digits.size(), 0);
  return DigitString(base, std::move(digits));
}

DigitString DigitString::from_natural(const Natural& value, std::uint64_t base) {
  require_base(base);
  return DigitString(base, natural_digits(value, base));
}

DigitString DigitString::parse(std::string_view text, std::uint64_t base) {
  std::vector<Digit> digits;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view token = text.substr(pos, comma - pos);
    Digit d = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw Error(ErrorKind::InvalidInput, "malformed digit '" + std::string(token) +
                                               "' in string '" + std::string(text) + "'");
    }
    digits.push_back(d);
    pos = comma + 1;
  }
  return DigitString(base, std::move(digits));
}

std::string DigitString::to_wire() const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(digits_[i]);
  }
  return out;
}

ExactFraction::ExactFraction(Natural numerator, Natural denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (sgn(denominator_) == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  Natural g;
  mpz_gcd(g.get_mpz_t(), numerator_.get_mpz_t(), denominator_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(numerator_.get_mpz_t(), numerator_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
  }
}

std::string ExactFraction::to_string() const {
  return to_decimal(numerator_) + "/" + to_decimal(denominator_);
}

Expansion::Expansion(Natural m, std::uint64_t base, DigitString repetend)
    : m_(std::move(m)), repetend_(std::move(repetend)) {
  if (repetend_.base() != base) {
    throw Error(ErrorKind::InvalidInput, "repetend base does not match expansion base");
  }
}

Digit Expansion::digit(std::uint64_t k) const {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "digit indices start at 1");
  return repetend_[(k - 1) % period()];
}

namespace {

void require_materializable(std::size_t produced, const Natural& m) {
  if (produced >= kMaxExpansionDigits) {
    throw Error(ErrorKind::OrderBudgetExceeded,
                "period of 1/" + to_decimal(m) + " exceeds " +
                    std::to_string(kMaxExpansionDigits) + " digits");
  }
}

}  // namespace

Expansion expand(const Natural& m, std::uint64_t base) {
  require_base(base);
  require_modulus_at_least_2(m);
  require_coprime(m, Natural(base));

  std::vector<Digit> digits;
  if (fits_u64(m)) {
    const auto mod = static_cast<u128>(to_u64(m));
    u128 r = 1;
    do {
      r *= base;
      digits.push_back(static_cast<Digit>(r / mod));
      r %= mod;
      require_materializable(digits.size(), m);
    } while (r != 1);
  } else {
    Natural r = 1, q;
    do {
      r *= base;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
      digits.push_back(to_u64(q));
      require_materializable(digits.size(), m);
    } while (r != 1);
  }
  return Expansion(m, base, DigitString(base, std::move(digits)));
}

Digit digit_via_residues(const Natural& m, std::uint64_t base, const Natural& k) {
  require_base(base);
  require_modulus_at_least_2(m);
  require_coprime(m, Natural(base));
  if (k < 1) throw Error(ErrorKind::InvalidInput, "digit indices start at 1");

  const Natural n(base);
  const Natural prev = mod_pow(n, k - 1, m);
  const Natural curr = mod_pow(n, k, m);
  const Natural numerator = n * prev - curr;
  Natural digit, rem;
  mpz_fdiv_qr(digit.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), m.get_mpz_t());
  if (sgn(rem) != 0 || sgn(digit) < 0 || digit >= n) {
    throw Error(ErrorKind::InternalInconsistency,
                "residue digit formula left the range [0, base) at k = " + to_decimal(k));
  }
  return to_u64(digit);
}

Natural string_value(const DigitString& s) {
  // Fold digits into 64-bit chunks first so the bignum sees one
  // multiply-add per chunk instead of one per digit.
  const std::uint64_t base = s.base();
  std::size_t chunk = 1;
  std::uint64_t chunk_scale = base;
  while (chunk_scale <= UINT64_MAX / base) {
    chunk_scale *= base;
    ++chunk;
  }

  const auto digits = s.digits();
  Natural value = 0;
  std::size_t i = 0;
  std::size_t first = digits.size() % chunk;
  if (first == 0) first = chunk;
  while (i < digits.size()) {
    const std::size_t len = i == 0 ? first : chunk;
    std::uint64_t acc = 0, scale = 1;
    for (std::size_t j = 0; j < len; ++j) {
      acc = acc * base + digits[i + j];
      scale *= base;
    }
    mpz_mul_ui(value.get_mpz_t(), value.get_mpz_t(), scale);
    mpz_add_ui(value.get_mpz_t(), value.get_mpz_t(), acc);
    i += len;
  }
  return value;
}

ExactFraction repeating_value(const DigitString& s) {
  Natural value = string_value(s);
  if (sgn(value) == 0) {
    throw Error(ErrorKind::ZeroValue, "all-zero string repeats to 0; no modulus corresponds");
  }
  return ExactFraction(std::move(value), power(Natural(s.base()), s.size()) - 1);
}

std::uint64_t ceil_log(const Natural& m, std::uint64_t base) {
  require_base(base);
  if (m < 1) throw Error(ErrorKind::InvalidInput, "logarithm of zero");
  std::uint64_t k = 0;
  Natural p = 1;
  while (p < m) {
    p *= base;
    ++k;
  }
  return k;
}

std::uint64_t first_nonzero_index(const Natural& m, std::uint64_t base) {
  require_base(base);
  require_modulus_at_least_2(m);
  require_coprime(m, Natural(base));
  Natural k = 1;
  while (digit_via_residues(m, base, k) == 0) ++k;
  const std::uint64_t index = to_u64(k);
  if (index != ceil_log(m, base)) {
    throw Error(ErrorKind::InternalInconsistency,
                "first nonzero digit of 1/" + to_decimal(m) + " at " + std::to_string(index) +
                    " but ceil(log) = " + std::to_string(ceil_log(m, base)));
  }
  return index;
}

Natural quotient_value(const Natural& m, std::uint64_t base) {
  require_base(base);
  require_modulus_at_least_2(m);
  const Natural n(base);
  const Natural order = multiplicative_order(n, m);
  Natural q;
  const Natural top = power(n, to_u64(order)) - 1;
  if (mpz_divisible_p(top.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorKind::InternalInconsistency, "m does not divide base^order - 1");
  }
  mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), m.get_mpz_t());
  return q;
}

std::size_t minimal_word_period(std::span<const Digit> digits) {
  const std::size_t l = digits.size();
  for (std::size_t d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    if (std::equal(digits.begin() + static_cast<std::ptrdiff_t>(d), digits.end(),
                   digits.begin())) {
      return d;
    }
  }
  return l;
}

std::uint64_t period_by_digit_pattern(const Natural& a, std::uint64_t l, std::uint64_t base) {
  return minimal_word_period(DigitString::from_natural(a, base, l));
}

std::uint64_t period_by_divisibility(const Natural& a, std::uint64_t l, std::uint64_t base) {
  require_base(base);
  if (l == 0) throw Error(ErrorKind::InvalidInput, "target length must be positive");
  const Natural n(base);
  const Natural top = power(n, l) - 1;
  for (std::uint64_t d = 1; d < l; ++d) {
    if (l % d != 0) continue;
    Natural repunit;
    const Natural bottom = power(n, d) - 1;
    mpz_divexact(repunit.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
    if (mpz_divisible_p(a.get_mpz_t(), repunit.get_mpz_t()) != 0) return d;
  }
  return l;
}

PeriodicityVerdict is_periodic_padded(const Natural& a, std::uint64_t l, std::uint64_t base) {
  const std::uint64_t by_digits = period_by_digit_pattern(a, l, base);
  const std::uint64_t by_division = period_by_divisibility(a, l, base);
  if (by_digits != by_division) {
    throw Error(ErrorKind::InternalInconsistency,
                "periodicity criteria disagree for " + to_decimal(a) + " at length " +
                    std::to_string(l) + ": digits " + std::to_string(by_digits) +
                    ", divisibility " + std::to_string(by_division));
  }
  return {by_digits < l, by_digits};
}

}  // namespace repetend
