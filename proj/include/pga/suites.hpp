#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pga/random.hpp"

namespace pga::verify {

/// Thrown by `require` when a check inside a case fails.
class CheckFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string &what) {
  if (!condition)
    throw CheckFailure(what);
}

/// A randomized invariant check. `check` runs one case; it passes when it
/// returns without throwing.
struct Suite {
  std::string name;
  std::string description;
  /// Acceptance criterion this suite backs, 0 when it is supplementary.
  int criterion = 0;
  std::size_t cases = 0;
  std::function<void(std::size_t index, CaseRng &rng)> check;
};

/// Every suite, in a fixed order.
const std::vector<Suite> &all_suites();

std::vector<Suite> suites_for_criterion(int criterion);

} // namespace pga::verify
