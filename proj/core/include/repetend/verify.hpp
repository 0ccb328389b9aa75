#pragma once

// Sweeps that exercise the digit identities over a range of moduli and
// report one pass/fail line per identity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace repetend {

struct LemmaCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyConfig {
  std::uint64_t max_m = 500;
  std::vector<std::uint64_t> bases{2, 10};
};

/// Runs every check over 2 <= m <= max_m for each configured base.
std::vector<LemmaCheck> verify_lemmas(const VerifyConfig& config);

}  // namespace repetend
