#include "pga/runner.hpp"

#include <optional>

namespace pga::verify {

namespace {

std::optional<std::string> run_case(const Suite &suite, std::uint64_t seed,
                                    std::size_t index) {
  try {
    CaseRng rng(seed, index);
    suite.check(index, rng);
    return std::nullopt;
  } catch (const CheckFailure &f) {
    return std::string(f.what());
  } catch (const Error &e) {
    return "unexpected " + std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception &e) {
    return std::string("unexpected exception: ") + e.what();
  }
}

SuiteResult collect(const Suite &suite,
                    std::vector<std::optional<std::string>> outcomes) {
  SuiteResult r{suite.name, suite.criterion, suite.cases, 0, {}};
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i])
      r.failures.push_back({i, std::move(*outcomes[i])});
    else
      ++r.passed;
  }
  return r;
}

} // namespace

std::uint64_t suite_seed(std::uint64_t seed, const std::string &name) {
  // FNV-1a over the name, mixed with the global seed.
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

SuiteResult run_suite(const Suite &suite, std::uint64_t seed,
                      Execution exec) {
  const std::uint64_t s = suite_seed(seed, suite.name);
  const auto n = static_cast<std::int64_t>(suite.cases);
  std::vector<std::optional<std::string>> outcomes(suite.cases);

  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i)
      outcomes[i] = run_case(suite, s, static_cast<std::size_t>(i));
  } else {
    // Case cost varies with coefficient growth.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i)
      outcomes[i] = run_case(suite, s, static_cast<std::size_t>(i));
  }
  return collect(suite, std::move(outcomes));
}

std::vector<SuiteResult> run_suites(std::span<const Suite> suites,
                                    std::uint64_t seed, Execution exec) {
  std::vector<SuiteResult> out;
  out.reserve(suites.size());
  for (const auto &s : suites)
    out.push_back(run_suite(s, seed, exec));
  return out;
}

} // namespace pga::verify
