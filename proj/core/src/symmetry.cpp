#include "repetend/symmetry.hpp"

#include "repetend/error.hpp"
#include "repetend/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace repetend {

DigitString cyclic_shift(const DigitString& s, const Natural& t) {
  const auto offset = static_cast<std::ptrdiff_t>(mpz_fdiv_ui(t.get_mpz_t(), s.size()));
  std::vector<Digit> rotated(s.digits().begin(), s.digits().end());
  std::rotate(rotated.begin(), rotated.begin() + offset, rotated.end());
  return DigitString(s.base(), std::move(rotated));
}

ExactFraction shift_fraction(const Natural& m, std::uint64_t base, const Natural& t) {
  const Expansion e = expand(m, base);
  ExactFraction by_residue(mod_pow(Natural(base), t, m), m);
  const ExactFraction by_rotation = repeating_value(cyclic_shift(e.repetend(), t));
  if (by_residue != by_rotation) {
    throw Error(ErrorKind::InternalInconsistency,
                "rotation by " + to_decimal(t) + " gives " + by_rotation.to_string() +
                    " but the residue gives " + by_residue.to_string());
  }
  return by_residue;
}

std::vector<ExactFraction> shift_fractions_by_residue(const Expansion& e) {
  std::vector<ExactFraction> out;
  out.reserve(e.period());
  const Natural& m = e.modulus();
  Natural r = 1;
  for (std::uint64_t t = 0; t < e.period(); ++t) {
    out.emplace_back(r, m);
    r = least_residue(r * e.base(), m);
  }
  return out;
}

std::vector<ExactFraction> shift_fractions_by_rotation(const Expansion& e) {
  std::vector<ExactFraction> out;
  out.reserve(e.period());
  const DigitString& s = e.repetend();
  const Natural denominator = power(Natural(e.base()), s.size()) - 1;
  Natural value = string_value(s);
  for (std::uint64_t t = 0; t < e.period(); ++t) {
    out.emplace_back(value, denominator);
    // Moving the leading digit d to the back maps v to v * base - d * (base^l - 1).
    value *= e.base();
    value -= denominator * s[t];
  }
  return out;
}

std::vector<Natural> orbit_residues(const Natural& m, std::uint64_t base) {
  const Natural n(base);
  const std::uint64_t order = to_u64(multiplicative_order(n, m));
  std::vector<Natural> out;
  out.reserve(order);
  Natural r = m == 1 ? Natural(0) : Natural(1);
  for (std::uint64_t t = 0; t < order; ++t) {
    out.push_back(r);
    if (m > 1) r = least_residue(r * n, m);
  }
  return out;
}

bool complement_pairs_check(const Natural& m, std::uint64_t base) {
  if (!is_prime(m)) {
    throw Error(ErrorKind::Precondition, to_decimal(m) + " is not prime");
  }
  const Expansion e = expand(m, base);
  if (e.period() % 2 != 0) {
    throw Error(ErrorKind::NotApplicable, "order of " + std::to_string(base) + " mod " +
                                              to_decimal(m) + " is " +
                                              std::to_string(e.period()) + ", which is odd");
  }
  const std::uint64_t half = e.period() / 2;
  const auto& s = e.repetend();
  for (std::uint64_t k = 0; k < half; ++k) {
    if (s[k] + s[k + half] != base - 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> RunLengthForm::lengths() const {
  std::vector<std::uint64_t> out;
  out.reserve(runs.size());
  for (const auto& r : runs) out.push_back(r.length);
  return out;
}

std::uint64_t RunLengthForm::total_length() const {
  return std::accumulate(runs.begin(), runs.end(), std::uint64_t{0},
                         [](std::uint64_t acc, const Run& r) { return acc + r.length; });
}

RunLengthForm run_length_encode(const DigitString& s) {
  RunLengthForm form;
  for (const auto d : s.digits()) {
    if (!form.runs.empty() && form.runs.back().symbol == d) {
      ++form.runs.back().length;
    } else {
      form.runs.push_back({d, 1});
    }
  }
  return form;
}

Base2StructureReport base2_structure_report(const Natural& m) {
  if (m <= 3 || !is_prime(m)) {
    throw Error(ErrorKind::Precondition, "need a prime m > 3, got " + to_decimal(m));
  }
  const Natural order = multiplicative_order(Natural(2), m);
  if (order != m - 1) {
    throw Error(ErrorKind::NotApplicable, "2 is not a primitive root mod " + to_decimal(m) +
                                              " (order " + to_decimal(order) + ")");
  }

  Base2StructureReport report;
  report.m = m;
  report.form = run_length_encode(expand(m, 2).repetend());
  const auto t = report.form.lengths();
  const std::size_t r = t.size();
  auto fail = [&](std::string why) {
    if (!report.counterexample) report.counterexample = "m = " + to_decimal(m) + ": " + why;
  };

  report.run_count_mod4 = r % 4 == 2;
  if (!report.run_count_mod4) fail("run count " + std::to_string(r) + " is not 2 mod 4");

  report.half_symmetry = r % 2 == 0;
  for (std::size_t i = 0; report.half_symmetry && i < r; ++i) {
    if (t[i] != t[(i + r / 2) % r]) {
      report.half_symmetry = false;
      fail("run " + std::to_string(i + 1) + " differs from its partner half a cycle away");
    }
  }
  if (r % 2 != 0) fail("odd run count has no half-symmetry");

  // Runs are numbered from 1 and the repetend opens with a 0-run, so the
  // even-numbered runs (odd zero-based positions) are the 1-runs.
  std::multiset<std::uint64_t> one_runs;
  for (std::size_t i = 1; i < r; i += 2) one_runs.insert(t[i]);
  report.decrement_by_two = true;
  for (const auto len : one_runs) {
    if (len > 2 && !one_runs.contains(len - 2)) {
      report.decrement_by_two = false;
      fail("1-run of length " + std::to_string(len) + " has no 1-run of length " +
           std::to_string(len - 2));
      break;
    }
  }
  return report;
}

}  // namespace repetend
