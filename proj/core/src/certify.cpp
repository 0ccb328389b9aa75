#include "repetend/certify.hpp"

#include "repetend/error.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

namespace repetend {

namespace {

void require_odd_prime(const Natural& m) {
  if (m == 2 || !is_prime(m)) {
    throw Error(ErrorKind::Precondition, to_decimal(m) + " is not an odd prime");
  }
}

// l = ord_a(base) if it is at most max_length.
std::optional<std::uint64_t> bounded_order(const Natural& a, std::uint64_t base,
                                           std::uint64_t max_length) {
  if (a == 1) return 1;
  if (fits_u64(a)) {
    const auto mod = static_cast<u128>(to_u64(a));
    const u128 step = base % mod;
    u128 x = step;
    for (std::uint64_t d = 1; d <= max_length; ++d) {
      if (x == 1) return d;
      x = x * step % mod;
    }
    return std::nullopt;
  }
  const Natural step = least_residue(Natural(base), a);
  Natural x = step;
  for (std::uint64_t d = 1; d <= max_length; ++d) {
    if (x == 1) return d;
    x = least_residue(x * step, a);
  }
  return std::nullopt;
}

PrimitivityCertificate make_certificate(const ReconstructionResult& r, const Factorization& mf,
                                        const PrimePower& pp,
                                        const std::optional<Factorization>& af,
                                        const FactorOptions& factor) {
  const Natural n(r.base);
  const Natural l(r.l);
  PrimitivityCertificate c;
  c.base = r.base;
  c.a = r.a;
  c.string = r.padded_string;
  c.l = r.l;
  c.m = r.m;
  c.m_factorization = mf;
  c.p = pp.prime;
  c.p_exponent = pp.exponent;
  c.condition1 = mpz_divisible_p(l.get_mpz_t(), Natural(pp.prime - 1).get_mpz_t()) != 0 &&
                 mpz_divisible_p(r.m.get_mpz_t(), pp.prime.get_mpz_t()) != 0;

  // Every prime q of a*m has n^l = 1 mod q, so l is a usable multiple.
  auto order_mod = [&](const Natural& q) { return order_from_multiple(n, q, l, factor); };
  auto divides = [](const Natural& d, const Natural& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
  };

  const Natural ord_p = order_mod(pp.prime);
  c.condition2_statement = true;
  Natural reduced = power(pp.prime, pp.exponent);
  for (const auto& [q, e] : mf.factors) {
    if (q == pp.prime) continue;
    if (!divides(order_mod(q), ord_p)) c.condition2_statement = false;
    const Natural qe = power(q, e);
    if (least_residue(n, qe) != 1) reduced *= qe;
  }
  const Natural pe = power(pp.prime, pp.exponent);
  c.condition2_proof_form = order_mod(reduced) == order_mod(pe);

  if (r.a == 1) {
    c.condition2_over_am = c.condition2_statement;
  } else if (af) {
    bool holds = c.condition2_statement;
    for (const auto& [q, e] : af->factors) {
      c.a_primes.push_back(q);
      if (q != pp.prime && !divides(order_mod(q), ord_p)) holds = false;
    }
    c.condition2_over_am = holds;
  }
  c.verified = multiplicative_order(n, pp.prime, OrderOptions{OrderStrategy::Auto, factor}) ==
               pp.prime - 1;
  return c;
}

bool is_perfect_square(std::uint64_t x) {
  return mpz_perfect_square_p(Natural(x).get_mpz_t()) != 0;
}

}  // namespace

Natural alpha_quotient(const Natural& m, std::uint64_t base) {
  require_odd_prime(m);
  const Natural n(base);
  require_coprime(m, n);
  Natural alpha;
  const Natural top = power(n, to_u64(m - 1)) - 1;
  mpz_divexact(alpha.get_mpz_t(), top.get_mpz_t(), m.get_mpz_t());
  return alpha;
}

bool is_primitive_by_alpha(const Natural& m, std::uint64_t base) {
  const Natural alpha = alpha_quotient(m, base);
  const std::uint64_t length = to_u64(m - 1);
  const bool primitive = !is_periodic_padded(alpha, length, base).periodic;
  const bool by_order = multiplicative_order(Natural(base), m) == m - 1;
  if (primitive != by_order) {
    throw Error(ErrorKind::InternalInconsistency,
                "periodicity verdict and order test disagree for m = " + to_decimal(m) +
                    ", base = " + std::to_string(base));
  }
  return primitive;
}

std::string_view rejection_name(RejectionReason reason) noexcept {
  switch (reason) {
    case RejectionReason::Collapsed: return "collapsed";
    case RejectionReason::PeriodicString: return "periodic-string";
    case RejectionReason::NoQualifyingPrime: return "no-qualifying-prime";
  }
  return "unknown";
}

CertificationOutcome certify_from_integer(const Natural& a, std::uint64_t base,
                                 const CertifyOptions& options) {
  CertificationOutcome out{
      reconstruct_from_integer(a, base, OrderOptions{OrderStrategy::Auto, options.factor}),
      {},
      std::nullopt};
  const auto& r = out.reconstruction;
  if (r.collapsed) {
    out.rejection = Rejection{RejectionReason::Collapsed,
                              "m = " + to_decimal(r.m) + " after padding to " +
                                  std::to_string(r.l) + " digits"};
    return out;
  }
  if (const auto d = minimal_word_period(r.padded_string); d < r.l) {
    out.rejection = Rejection{RejectionReason::PeriodicString,
                              "padded string " + r.padded_string.to_wire() +
                                  " repeats a block of length " + std::to_string(d)};
    return out;
  }

  const Factorization mf = factorize(r.m, options.factor);
  const Natural l(r.l);
  std::optional<Factorization> af;
  bool af_tried = false;
  for (const auto& pp : mf.factors) {
    if (mpz_divisible_p(l.get_mpz_t(), Natural(pp.prime - 1).get_mpz_t()) == 0) continue;
    if (!af_tried && r.a > 1) {
      // The a-side audit is optional: give up quietly where a resists factoring.
      af_tried = true;
      try {
        af = factorize(r.a, options.factor);
      } catch (const FactorizationBudgetExceeded&) {
      }
    }
    out.certificates.push_back(make_certificate(r, mf, pp, af, options.factor));
  }
  if (out.certificates.empty()) {
    out.rejection = Rejection{RejectionReason::NoQualifyingPrime,
                              "no prime p | " + to_decimal(r.m) + " has (p - 1) | " +
                                  std::to_string(r.l)};
  }
  return out;
}

ScanSummary scan(const ScanConfig& config, const CertificateSink& sink) {
  if (config.base < 2) throw Error(ErrorKind::InvalidInput, "base must be at least 2");
  if (config.max_length < 1) throw Error(ErrorKind::InvalidInput, "max length must be positive");

  const Natural n(config.base);
  const Natural domain_end = power(n, config.max_length);  // exclusive
  ScanSummary summary;
  if (is_perfect_square(config.base)) {
    summary.advisory =
        "base " + std::to_string(config.base) +
        " is a perfect square, hence a quadratic residue mod every odd prime; only p = 2 "
        "can be certified";
  }

  // Canonical candidate stream.
  Natural next_exhaustive = 1;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(config.seed));
  std::uint64_t draws = 0;
  auto next_candidate = [&]() -> std::optional<Natural> {
    if (config.mode == ScanMode::Exhaustive) {
      while (next_exhaustive < domain_end) {
        Natural a = next_exhaustive++;
        if (mpz_gcd_ui(nullptr, a.get_mpz_t(), config.base) == 1) return a;
      }
      return std::nullopt;
    }
    while (draws < config.samples) {
      ++draws;
      Natural a = rng.get_z_range(domain_end - 1) + 1;
      if (mpz_gcd_ui(nullptr, a.get_mpz_t(), config.base) == 1) return a;
    }
    return std::nullopt;
  };

  struct Slot {
    std::optional<CertificationOutcome> outcome;
    std::exception_ptr error;
  };
  const CertifyOptions certify_options{config.factor};
  auto evaluate = [&](const Natural& a, Slot& slot) {
    try {
      if (bounded_order(a, config.base, config.max_length)) {
        slot.outcome = certify_from_integer(a, config.base, certify_options);
      }
    } catch (...) {
      slot.error = std::current_exception();
    }
  };

  const unsigned workers = std::max(1u, config.workers);
  const std::size_t block_size = 256 * workers;
  std::set<Natural> seen_primes;
  std::vector<Natural> block;
  std::vector<Slot> slots;
  bool done = false;
  while (!done) {
    block.clear();
    while (block.size() < block_size) {
      if (config.candidate_budget != 0 &&
          summary.examined + block.size() >= config.candidate_budget) {
        break;
      }
      auto a = next_candidate();
      if (!a) break;
      block.push_back(std::move(*a));
    }
    if (block.empty()) {
      if (config.candidate_budget != 0 && summary.examined >= config.candidate_budget &&
          next_candidate()) {
        summary.truncated = true;
        summary.truncation_reason =
            "candidate budget of " + std::to_string(config.candidate_budget) + " exhausted";
      }
      break;
    }

    slots.assign(block.size(), Slot{});
    if (workers == 1) {
      for (std::size_t i = 0; i < block.size(); ++i) evaluate(block[i], slots[i]);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < block.size(); i += workers) evaluate(block[i], slots[i]);
        });
      }
    }

    for (std::size_t i = 0; i < block.size(); ++i) {
      ++summary.examined;
      if (slots[i].error) {
        try {
          std::rethrow_exception(slots[i].error);
        } catch (const FactorizationBudgetExceeded& e) {
          summary.truncated = true;
          summary.truncation_reason = "at a = " + to_decimal(block[i]) + ": " + e.what();
          done = true;
          break;
        }
      }
      if (!slots[i].outcome) continue;
      ++summary.qualifying;
      for (const auto& cert : slots[i].outcome->certificates) {
        if (!cert.verified) continue;
        if (config.distinct_primes && !seen_primes.insert(cert.p).second) continue;
        ++summary.emitted;
        sink(cert);
      }
    }
  }
  return summary;
}

}  // namespace repetend
