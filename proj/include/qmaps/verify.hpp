#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmaps {

/// Families of exact-identity checks run on seeded random samples.
enum class Suite { periodicity, conjugacy, closedform, integrals, varieties, symplectic, all };

std::string_view to_string(Suite suite);
Suite parse_suite(std::string_view text);

struct CheckResult {
  std::string suite;
  std::string name;
  unsigned passed = 0;
  unsigned failed = 0;
  /// First failing sample, rendered with exact rationals.
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return failed == 0; }
  void record(bool ok, const std::string& what);
};

/// Runs every check of `suite` on `samples` seeded samples each. Checks run
/// concurrently on up to `threads` workers; results come back in the fixed
/// definition order and depend only on (suite, seed, samples).
std::vector<CheckResult> run_verification(Suite suite, std::uint64_t seed, unsigned samples,
                                          unsigned threads = 0);

}  // namespace qmaps
