#pragma once

// Modular arithmetic substrate: residues, powers, multiplicative order,
// primality and factorization over exact naturals.

#include "repetend/error.hpp"
#include "repetend/natural.hpp"

#include <cstdint>
#include <vector>

namespace repetend {

/// Trial division is carried out with every prime below this bound before
/// the rho splitter is engaged.
inline constexpr std::uint64_t kTrialDivisionBound = 1024;

/// Default number of rho iterations a single factorize() call may spend.
/// Every input used by the acceptance suite needs far less than this.
inline constexpr std::uint64_t kDefaultFactorBudget = 2'000'000;
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'0f'fac7ull;

/// Inputs below 2^64 are decided by a fixed witness set that is known to be
/// exact there. Above it, the same bases plus kProbablePrimeRounds witnesses
/// drawn from a Mersenne twister seeded with kPrimalitySeed are used.
inline constexpr unsigned kProbablePrimeRounds = 16;
inline constexpr std::uint64_t kPrimalitySeed = 0x9e3779b97f4a7c15ull;

/// Number of powers the Auto order strategy tries before it switches to
/// factoring the group exponent.
inline constexpr std::uint64_t kAutoIncrementalSteps = 4096;

/// Residue of g in [0, m - 1]. Throws invalid-modulus for m < 2.
Natural least_residue(const Natural& g, const Natural& m);

/// Throws not-coprime unless gcd(a, b) = 1.
void require_coprime(const Natural& a, const Natural& b);

/// b^e mod m by left-to-right square-and-multiply.
Natural mod_pow(const Natural& b, const Natural& e, const Natural& m);

bool is_prime(const Natural& x);

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of `subject`; primes strictly increasing.
struct Factorization {
  Natural subject;
  std::vector<PrimePower> factors;

  Natural recompose() const;
  /// Exponent of `prime` in subject, 0 when absent.
  std::uint64_t exponent_of(const Natural& prime) const;
  bool operator==(const Factorization&) const = default;
};

struct FactorOptions {
  std::uint64_t budget = kDefaultFactorBudget;
  std::uint64_t seed = kDefaultFactorSeed;
};

/// Raised when the rho budget runs out. Carries what was found so far.
class FactorizationBudgetExceeded : public Error {
 public:
  FactorizationBudgetExceeded(Natural subject, std::vector<PrimePower> found,
                              std::vector<Natural> unfactored);

  const Natural& subject() const noexcept { return subject_; }
  const std::vector<PrimePower>& found() const noexcept { return found_; }
  const std::vector<Natural>& unfactored() const noexcept { return unfactored_; }

 private:
  Natural subject_;
  std::vector<PrimePower> found_;
  std::vector<Natural> unfactored_;
};

/// Complete factorization of x >= 2: trial division, then a seeded
/// Pollard-Brent splitter. Identical seeds give identical trajectories.
Factorization factorize(const Natural& x, const FactorOptions& options = {});

/// Carmichael exponent of the unit group mod the factored subject.
Natural carmichael_lambda(const Factorization& f);

/// All positive divisors, ascending.
std::vector<Natural> divisors(const Factorization& f);

enum class OrderStrategy {
  /// Bounded incremental search, then Divisors if that did not finish.
  Auto,
  /// Multiply by n until the running power returns to 1.
  Incremental,
  /// Factor the Carmichael exponent and strip prime factors while n^(d/q) = 1.
  Divisors,
};

struct OrderOptions {
  OrderStrategy strategy = OrderStrategy::Auto;
  FactorOptions factor{};
  /// Step cap for the Incremental strategy; exceeding it raises
  /// order-budget-exceeded.
  std::uint64_t incremental_limit = UINT64_MAX;
};

/// Smallest d >= 1 with n^d = 1 (mod m). multiplicative_order(n, 1) = 1.
/// Throws not-coprime when gcd(n, m) != 1 and invalid-modulus for m = 0.
Natural multiplicative_order(const Natural& n, const Natural& m,
                             const OrderOptions& options = {});

/// Order of n mod m given some known multiple of it (n^multiple = 1 mod m).
Natural order_from_multiple(const Natural& n, const Natural& m, const Natural& multiple,
                            const FactorOptions& options = {});

}  // namespace repetend
