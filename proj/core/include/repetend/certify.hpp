#pragma once

// Primitive-root certification: the periodicity test on
// (n^(m-1) - 1)/m, the sufficient condition on a reconstructed modulus,
// and a scan driver that hunts for certifiable primes.

#include "repetend/expansion.hpp"
#include "repetend/natural.hpp"
#include "repetend/numtheory.hpp"
#include "repetend/reconstruction.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace repetend {

/// (base^(m-1) - 1)/m for an odd prime m coprime to base.
Natural alpha_quotient(const Natural& m, std::uint64_t base);

/// base is primitive mod m iff alpha_quotient, padded to m - 1 digits, is
/// aperiodic. The verdict is cross-checked against the order of base mod m.
bool is_primitive_by_alpha(const Natural& m, std::uint64_t base);

struct PrimitivityCertificate {
  std::uint64_t base = 0;
  Natural a;
  DigitString string;
  std::uint64_t l = 0;
  Natural m;
  Factorization m_factorization;
  Natural p;
  std::uint64_t p_exponent = 0;

  /// (p - 1) | l and p | m.
  bool condition1 = false;
  /// ord_q(base) | ord_p(base) for every prime q | m other than p.
  bool condition2_statement = false;
  /// After dropping every q^e || m (q != p) with base = 1 mod q^e, the
  /// remaining modulus has the same order as p^e.
  bool condition2_proof_form = false;
  /// Primes of a, kept for auditing the reading where q ranges over a*m.
  /// Empty when a = 1 or a could not be factored within the budget.
  std::vector<Natural> a_primes;
  /// condition2_statement extended to every prime q | a*m, q != p; absent
  /// when a could not be factored within the budget.
  std::optional<bool> condition2_over_am;
  /// ord_p(base) = p - 1, checked directly.
  bool verified = false;
};

enum class RejectionReason { Collapsed, PeriodicString, NoQualifyingPrime };

std::string_view rejection_name(RejectionReason reason) noexcept;

struct Rejection {
  RejectionReason reason;
  std::string detail;
};

struct CertificationOutcome {
  ReconstructionResult reconstruction;
  /// One per prime p | m with (p - 1) | l, verified or not.
  std::vector<PrimitivityCertificate> certificates;
  std::optional<Rejection> rejection;
};

struct CertifyOptions {
  FactorOptions factor{};
};

/// Reconstructs m from a and evaluates the sufficient condition for every
/// prime p | m with (p - 1) | l. FactorizationBudgetExceeded on m propagates.
CertificationOutcome certify_from_integer(const Natural& a, std::uint64_t base,
                                 const CertifyOptions& options = {});

enum class ScanMode { Exhaustive, Random };

struct ScanConfig {
  std::uint64_t base = 2;
  /// Largest admissible l = ord_a(base); candidates are a < base^max_length.
  std::uint64_t max_length = 1;
  ScanMode mode = ScanMode::Exhaustive;
  std::uint64_t seed = 0;
  /// Draws made in random mode.
  std::uint64_t samples = 10'000;
  /// Maximum number of candidates examined; 0 means the whole domain.
  std::uint64_t candidate_budget = 0;
  FactorOptions factor{};
  unsigned workers = 1;
  /// Emit only the first certificate for each prime p.
  bool distinct_primes = true;
};

struct ScanSummary {
  std::uint64_t examined = 0;
  std::uint64_t qualifying = 0;
  std::uint64_t emitted = 0;
  bool truncated = false;
  std::optional<std::string> truncation_reason;
  std::optional<std::string> advisory;
};

using CertificateSink = std::function<void(const PrimitivityCertificate&)>;

/// Streams verified certificates to `sink` in canonical enumeration order
/// (ascending a, or draw order in random mode) whatever the worker count.
ScanSummary scan(const ScanConfig& config, const CertificateSink& sink);

}  // namespace repetend
