#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pga/execution.hpp"
#include "pga/suites.hpp"

namespace pga::verify {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2017;

struct CaseFailure {
  std::size_t index;
  std::string message;
  friend bool operator==(const CaseFailure &, const CaseFailure &) = default;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  /// Failures in case order.
  std::vector<CaseFailure> failures;

  bool ok() const { return passed == cases; }
};

/// Runs every case of the suite. Serial is the reference loop; Parallel
/// distributes cases over OpenMP threads and must produce identical results.
SuiteResult run_suite(const Suite &suite, std::uint64_t seed,
                      Execution exec = Execution::Parallel);

std::vector<SuiteResult> run_suites(std::span<const Suite> suites,
                                    std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

/// Seed for a named suite, derived from the global seed.
std::uint64_t suite_seed(std::uint64_t seed, const std::string &name);

} // namespace pga::verify
