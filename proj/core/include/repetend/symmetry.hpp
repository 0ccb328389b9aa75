#pragma once

// Symmetries of the repetend of 1/m: rotations against residues of powers,
// digit complements, and the run-length structure at base 2.

#include "repetend/expansion.hpp"
#include "repetend/natural.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace repetend {

/// sigma_t(s) = (d_{t+1}, ..., d_l, d_1, ..., d_t), t taken mod l.
DigitString cyclic_shift(const DigitString& s, const Natural& t);

/// {n^t / m} = [n^t]_m / m in lowest terms. Cross-checked against the
/// repeating value of the rotated repetend; disagreement raises
/// internal-inconsistency.
ExactFraction shift_fraction(const Natural& m, std::uint64_t base, const Natural& t);

/// [n^t]_m / m for every t < period, from residues.
std::vector<ExactFraction> shift_fractions_by_residue(const Expansion& e);

/// repeating_value(sigma_t(repetend)) for every t < period. Rotations are
/// applied to the string value incrementally instead of re-evaluating each
/// rotated string.
std::vector<ExactFraction> shift_fractions_by_rotation(const Expansion& e);

/// [n^t]_m for 0 <= t < O_m(n), in order of t. Entries are distinct.
std::vector<Natural> orbit_residues(const Natural& m, std::uint64_t base);

/// a_k + a_{k + O/2} = base - 1 for every k. Requires m prime (precondition)
/// and an even order (not-applicable otherwise).
bool complement_pairs_check(const Natural& m, std::uint64_t base);

struct Run {
  Digit symbol = 0;
  std::uint64_t length = 0;

  bool operator==(const Run&) const = default;
};

/// Maximal runs, in order. Adjacent runs carry distinct symbols.
struct RunLengthForm {
  std::vector<Run> runs;

  std::vector<std::uint64_t> lengths() const;
  std::uint64_t total_length() const;
  bool operator==(const RunLengthForm&) const = default;
};

RunLengthForm run_length_encode(const DigitString& s);

/// Checks on the binary repetend of 1/m when 2 is a primitive root mod m.
struct Base2StructureReport {
  Natural m;
  RunLengthForm form;
  /// Number of runs is 2 mod 4.
  bool run_count_mod4 = false;
  /// t_i = t_{i + r/2} for all i, r the run count.
  bool half_symmetry = false;
  /// Every 1-run (even index) longer than 2 has a 1-run exactly 2 shorter.
  bool decrement_by_two = false;
  /// First failing claim, empty when everything holds.
  std::optional<std::string> counterexample;

  bool all_hold() const { return run_count_mod4 && half_symmetry && decrement_by_two; }
};

/// Requires m > 3 prime (precondition) with 2 primitive mod m (not-applicable).
Base2StructureReport base2_structure_report(const Natural& m);

}  // namespace repetend
