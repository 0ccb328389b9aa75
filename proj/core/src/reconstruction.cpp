#include "repetend/reconstruction.hpp"

#include "repetend/error.hpp"

namespace repetend {

namespace {

ReconstructionResult finish(std::uint64_t base, Natural a, DigitString padded,
                            const Natural& top, const OrderOptions& options) {
  Natural m;
  mpz_divexact(m.get_mpz_t(), top.get_mpz_t(), a.get_mpz_t());
  const std::uint64_t l = padded.size();
  // m divides base^l - 1, so its order divides l.
  Natural order = order_from_multiple(Natural(base), m, Natural(l), options.factor);
  const bool collapsed = m <= 1;
  return ReconstructionResult{base,           std::move(a), std::move(padded), l, std::move(m),
                              std::move(order), collapsed};
}

}  // namespace

ReconstructionResult reconstruct_from_integer(const Natural& a, std::uint64_t base,
                                              const OrderOptions& options) {
  if (base < 2) throw Error(ErrorKind::InvalidInput, "base must be at least 2");
  if (a < 1) throw Error(ErrorKind::InvalidInput, "value must be positive");
  const Natural n(base);
  require_coprime(a, n);
  const std::uint64_t l = to_u64(multiplicative_order(n, a, options));
  DigitString padded = DigitString::from_natural(a, base, l);
  return finish(base, a, std::move(padded), power(n, l) - 1, options);
}

ReconstructionResult reconstruct_from_string(const DigitString& s, const OrderOptions& options) {
  const std::uint64_t base = s.base();
  const Natural n(base);
  require_coprime(Natural(s[s.size() - 1]), n);
  if (const auto d = minimal_word_period(s); d < s.size()) {
    throw Error(ErrorKind::ReducibleString, "string " + s.to_wire() + " repeats a block of length " +
                                                std::to_string(d));
  }
  Natural a = string_value(s);
  const Natural top = power(n, s.size()) - 1;
  if (mpz_divisible_p(top.get_mpz_t(), a.get_mpz_t()) == 0) {
    throw Error(ErrorKind::NoModulus, "value " + to_decimal(a) + " does not divide " +
                                          std::to_string(base) + "^" + std::to_string(s.size()) +
                                          " - 1");
  }
  return finish(base, std::move(a), s, top, options);
}

}  // namespace repetend
