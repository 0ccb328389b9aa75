#include "repetend/verify.hpp"

#include "repetend/certify.hpp"
#include "repetend/error.hpp"
#include "repetend/expansion.hpp"
#include "repetend/numtheory.hpp"
#include "repetend/reconstruction.hpp"
#include "repetend/symmetry.hpp"

#include <numeric>
#include <set>

namespace repetend {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { check_.name = std::move(name); }

  template <typename F>
  void run(const std::string& label, F&& body) {
    ++check_.cases;
    try {
      if (body()) return;
      record(label);
    } catch (const std::exception& e) {
      record(label + " threw " + e.what());
    }
  }

  LemmaCheck take() { return std::move(check_); }

 private:
  void record(const std::string& what) {
    ++check_.failures;
    if (!check_.first_failure) check_.first_failure = what;
  }

  LemmaCheck check_;
};

std::string label(std::uint64_t m, std::uint64_t base) {
  return "m = " + std::to_string(m) + ", base = " + std::to_string(base);
}

bool coprime(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; }

}  // namespace

std::vector<LemmaCheck> verify_lemmas(const VerifyConfig& config) {
  Tally orders("order-strategies"), quotient("quotient-identity"), first("first-nonzero-index"),
      shifts("shift-residue"), digits("residue-digit-formula"), congruence("digit-congruence"),
      complement("complement-pairs"), runs("base2-runs"), alpha("periodic-alpha"),
      round_trip("round-trip"), criteria("periodicity-criteria"),
      soundness("certificate-soundness");

  for (const auto base : config.bases) {
    const Natural n(base);
    for (std::uint64_t m = 2; m <= config.max_m; ++m) {
      if (!coprime(m, base)) continue;
      const Natural mm(m);
      const Expansion e = expand(mm, base);
      const std::string where = label(m, base);

      orders.run(where, [&] {
        return multiplicative_order(n, mm, {OrderStrategy::Incremental}) ==
               multiplicative_order(n, mm, {OrderStrategy::Divisors});
      });
      quotient.run(where, [&] {
        return string_value(e.repetend()) * mm == power(n, e.period()) - 1 &&
               quotient_value(mm, base) == string_value(e.repetend());
      });
      first.run(where, [&] {
        const auto k = first_nonzero_index(mm, base);
        std::uint64_t expected = 1;
        while (e.digit(expected) == 0) ++expected;
        return k == expected && k == ceil_log(mm, base);
      });
      shifts.run(where, [&] {
        const bool values = shift_fractions_by_residue(e) == shift_fractions_by_rotation(e);
        const auto orbit = orbit_residues(mm, base);
        const std::set<Natural> distinct(orbit.begin(), orbit.end());
        // Closed under multiplication by the generator, hence a subgroup.
        bool closed = distinct.contains(Natural(1));
        for (const auto& x : orbit) {
          if (!distinct.contains(least_residue(x * n, mm))) closed = false;
        }
        return values && closed && distinct.size() == e.period();
      });
      digits.run(where, [&] {
        for (std::uint64_t k = 1; k <= e.period(); ++k) {
          if (digit_via_residues(mm, base, Natural(k)) != e.digit(k)) return false;
        }
        return true;
      });
      congruence.run(where, [&] {
        for (std::uint64_t k = 1; k <= e.period(); ++k) {
          const Natural lhs = mm * e.digit(k) + mod_pow(n, Natural(k), mm);
          if (least_residue(lhs, n) != 0) return false;
        }
        return true;
      });
      if (is_prime(mm) && e.period() % 2 == 0) {
        complement.run(where, [&] { return complement_pairs_check(mm, base); });
      }
      if (m % 2 == 1 && is_prime(mm)) {
        alpha.run(where, [&] {
          return is_primitive_by_alpha(mm, base) == (e.period() == m - 1);
        });
      }
      round_trip.run(where, [&] {
        const auto from_string = reconstruct_from_string(e.repetend());
        const auto from_integer = reconstruct_from_integer(string_value(e.repetend()), base);
        const Natural l(from_integer.l);
        return from_string.m == mm &&
               from_integer.a * from_integer.m == power(n, from_integer.l) - 1 &&
               mpz_divisible_p(l.get_mpz_t(), from_integer.order_of_base_mod_m.get_mpz_t()) != 0;
      });
    }

    // Every padded value of every length whose domain stays below 4096.
    std::uint64_t domain = base;
    for (std::uint64_t l = 1; domain <= 4096; ++l, domain *= base) {
      for (std::uint64_t a = 0; a < domain; ++a) {
        criteria.run("a = " + std::to_string(a) + ", l = " + std::to_string(l), [&] {
          return period_by_digit_pattern(Natural(a), l, base) ==
                 period_by_divisibility(Natural(a), l, base);
        });
      }
    }

    std::uint64_t length = 1;
    for (std::uint64_t top = base; top * base <= 100'000; top *= base) ++length;
    ScanConfig sc;
    sc.base = base;
    sc.max_length = length;
    sc.distinct_primes = false;
    scan(sc, [&](const PrimitivityCertificate& c) {
      soundness.run("a = " + to_decimal(c.a) + ", p = " + to_decimal(c.p), [&] {
        return is_prime(c.p) &&
               multiplicative_order(n, c.p, {OrderStrategy::Incremental}) == c.p - 1;
      });
    });
  }

  for (std::uint64_t m = 5; m <= config.max_m; ++m) {
    const Natural mm(m);
    if (!is_prime(mm) || multiplicative_order(Natural(2), mm) != m - 1) continue;
    runs.run("m = " + std::to_string(m), [&] { return base2_structure_report(mm).all_hold(); });
  }

  std::vector<LemmaCheck> out;
  for (Tally* t : {&orders, &quotient, &first, &shifts, &digits, &congruence, &complement, &runs,
                   &alpha, &round_trip, &criteria, &soundness}) {
    out.push_back(t->take());
  }
  return out;
}

}  // namespace repetend
