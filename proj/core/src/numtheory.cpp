#include "repetend/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <utility>

namespace repetend {

namespace {

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i < kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = i * i; j < kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Exact for every n < 3.3 * 10^24, in particular every 64-bit input.
constexpr std::array<unsigned long, 12> kDeterministicWitnesses = {2,  3,  5,  7,  11, 13,
                                                                   17, 19, 23, 29, 31, 37};

void mul_mod(Natural& acc, const Natural& factor, const Natural& m) {
  mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), factor.get_mpz_t());
  mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
}

void require_modulus(const Natural& m) {
  if (m < 2) {
    throw Error(ErrorKind::InvalidModulus, "modulus must be at least 2, got " + to_decimal(m));
  }
}

bool strong_probable_prime(const Natural& x, const Natural& witness, const Natural& odd_part,
                           std::uint64_t twos) {
  const Natural x_minus_1 = x - 1;
  Natural y = mod_pow(witness, odd_part, x);
  if (y == 1 || y == x_minus_1) return true;
  for (std::uint64_t i = 1; i < twos; ++i) {
    mul_mod(y, y, x);
    if (y == x_minus_1) return true;
    if (y == 1) return false;
  }
  return false;
}

std::optional<Natural> brent_split(const Natural& n, std::mt19937_64& rng,
                                   std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  const Natural span = n - 3;
  while (budget > 0) {
    Natural c = Natural(static_cast<unsigned long>(rng())) % span + 1;
    Natural y = Natural(static_cast<unsigned long>(rng())) % n;
    auto step = [&](Natural& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };

    Natural g = 1, q = 1, x, ys, diff;
    std::uint64_t r = 1;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t len = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < len; ++i) {
          step(y);
          diff = abs(x - y);
          mul_mod(q, diff, n);
        }
        budget = budget > len ? budget - len : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += kBatch;
        if (budget == 0 && g == 1) return std::nullopt;
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        step(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        if (budget > 0) --budget;
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return std::nullopt;
}

// Returns (root, k) with root^k = n and k maximal; k = 1 if n is no perfect power.
std::pair<Natural, std::uint64_t> perfect_power_root(const Natural& n) {
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return {n, 1};
  const std::uint64_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::uint64_t k = bits; k >= 2; --k) {
    Natural root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && root > 1) return {root, k};
  }
  return {n, 1};
}

}  // namespace

Natural least_residue(const Natural& g, const Natural& m) {
  require_modulus(m);
  Natural r;
  mpz_mod(r.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
  return r;
}

void require_coprime(const Natural& a, const Natural& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + to_decimal(a) + ", " + to_decimal(b) + ") = " + to_decimal(g));
  }
}

Natural mod_pow(const Natural& b, const Natural& e, const Natural& m) {
  require_modulus(m);
  const Natural base = least_residue(b, m);
  Natural result = 1;
  if (sgn(e) == 0) return result;
  for (auto bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    mul_mod(result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)) != 0) mul_mod(result, base, m);
  }
  return result;
}

bool is_prime(const Natural& x) {
  if (x < 2) return false;
  for (const auto p : small_primes()) {
    if (x == p) return true;
    if (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) return false;
  }
  Natural odd_part = x - 1;
  std::uint64_t twos = mpz_scan1(odd_part.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd_part.get_mpz_t(), odd_part.get_mpz_t(), twos);

  for (const auto w : kDeterministicWitnesses) {
    if (!strong_probable_prime(x, Natural(w), odd_part, twos)) return false;
  }
  if (fits_u64(x)) return true;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(kPrimalitySeed));
  const Natural span = x - 3;
  for (unsigned i = 0; i < kProbablePrimeRounds; ++i) {
    const Natural witness = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(x, witness, odd_part, twos)) return false;
  }
  return true;
}

Natural Factorization::recompose() const {
  Natural out = 1;
  for (const auto& pp : factors) out *= power(pp.prime, pp.exponent);
  return out;
}

std::uint64_t Factorization::exponent_of(const Natural& prime) const {
  for (const auto& pp : factors) {
    if (pp.prime == prime) return pp.exponent;
  }
  return 0;
}

FactorizationBudgetExceeded::FactorizationBudgetExceeded(Natural subject,
                                                         std::vector<PrimePower> found,
                                                         std::vector<Natural> unfactored)
    : Error(ErrorKind::FactorizationBudgetExceeded,
            "factorization budget exhausted for " + to_decimal(subject) + " with " +
                std::to_string(unfactored.size()) + " composite cofactor(s) left"),
      subject_(std::move(subject)),
      found_(std::move(found)),
      unfactored_(std::move(unfactored)) {}

Factorization factorize(const Natural& x, const FactorOptions& options) {
  if (x < 2) {
    throw Error(ErrorKind::InvalidInput, "factorize needs x >= 2, got " + to_decimal(x));
  }
  std::map<Natural, std::uint64_t> found;
  Natural rest = x;
  for (const auto p : small_primes()) {
    if (rest < p * p) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[Natural(p)];
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uint64_t budget = options.budget;
  std::vector<Natural> pending;
  if (rest > 1) pending.push_back(rest);
  std::vector<Natural> stuck;
  while (!pending.empty()) {
    Natural n = std::move(pending.back());
    pending.pop_back();
    if (is_prime(n)) {
      ++found[n];
      continue;
    }
    auto [root, k] = perfect_power_root(n);
    if (k > 1) {
      for (std::uint64_t i = 0; i < k; ++i) pending.push_back(root);
      continue;
    }
    if (auto d = brent_split(n, rng, budget)) {
      pending.push_back(n / *d);
      pending.push_back(std::move(*d));
    } else {
      stuck.push_back(std::move(n));
    }
  }

  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (auto& [p, e] : found) factors.push_back({p, e});
  if (!stuck.empty()) {
    std::sort(stuck.begin(), stuck.end());
    throw FactorizationBudgetExceeded(x, std::move(factors), std::move(stuck));
  }
  return Factorization{x, std::move(factors)};
}

Natural carmichael_lambda(const Factorization& f) {
  Natural lambda = 1;
  for (const auto& [p, e] : f.factors) {
    Natural part;
    if (p == 2) {
      part = e <= 2 ? Natural(e) : power(2, e - 2);
    } else {
      part = (p - 1) * power(p, e - 1);
    }
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), part.get_mpz_t());
  }
  return lambda;
}

std::vector<Natural> divisors(const Factorization& f) {
  std::vector<Natural> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t before = out.size();
    Natural pk = 1;
    for (std::uint64_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < before; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Natural order_from_multiple(const Natural& n, const Natural& m, const Natural& multiple,
                            const FactorOptions& options) {
  if (m == 1) return 1;
  if (multiple < 1 || mod_pow(n, multiple, m) != 1) {
    throw Error(ErrorKind::InvalidInput,
                to_decimal(multiple) + " is not a multiple of the order of " + to_decimal(n) +
                    " mod " + to_decimal(m));
  }
  if (multiple == 1) return 1;
  Natural d = multiple;
  for (const auto& [q, e] : factorize(multiple, options).factors) {
    for (std::uint64_t i = 0; i < e; ++i) {
      const Natural candidate = d / q;
      if (mod_pow(n, candidate, m) != 1) break;
      d = candidate;
    }
  }
  return d;
}

Natural multiplicative_order(const Natural& n, const Natural& m, const OrderOptions& options) {
  if (sgn(m) == 0) throw Error(ErrorKind::InvalidModulus, "modulus must be positive");
  require_coprime(n, m);
  if (m == 1) return 1;

  auto incremental = [&](std::uint64_t limit) -> std::optional<Natural> {
    const Natural step = least_residue(n, m);
    Natural x = step;
    std::uint64_t d = 1;
    while (x != 1) {
      if (d >= limit) return std::nullopt;
      mul_mod(x, step, m);
      ++d;
    }
    return Natural(d);
  };
  auto by_divisors = [&] {
    return order_from_multiple(n, m, carmichael_lambda(factorize(m, options.factor)),
                               options.factor);
  };

  switch (options.strategy) {
    case OrderStrategy::Incremental:
      if (auto d = incremental(options.incremental_limit)) return *d;
      throw Error(ErrorKind::OrderBudgetExceeded,
                  "order of " + to_decimal(n) + " mod " + to_decimal(m) + " exceeds " +
                      std::to_string(options.incremental_limit) + " steps");
    case OrderStrategy::Divisors:
      return by_divisors();
    case OrderStrategy::Auto:
      break;
  }
  if (auto d = incremental(kAutoIncrementalSteps)) return *d;
  return by_divisors();
}

}  // namespace repetend
