// Serial reference loops against their OpenMP counterparts.

#include <string>

#include <benchmark/benchmark.h>

#include "pga/expr.hpp"
#include "pga/runner.hpp"

namespace {

const pga::verify::Suite &suite_named(const std::string &name) {
  for (const auto &s : pga::verify::all_suites())
    if (s.name == name)
      return s;
  throw std::runtime_error("no suite " + name);
}

void BM_Suite(benchmark::State &state, const std::string &name,
              pga::Execution exec) {
  const auto &suite = suite_named(name);
  for (auto _ : state) {
    auto r = pga::verify::run_suite(suite, pga::verify::kDefaultSeed, exec);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(suite.cases));
}

std::string batch_input(std::size_t lines) {
  std::string text;
  for (std::size_t i = 0; i < lines; ++i) {
    const std::string k = std::to_string(i % 97 + 1);
    text += "(spread (join (point 0 0) (point " + k + " 3)) (line 1 " + k +
            " -2))\n";
    text += "(centroid (point 0 " + k + ") (point 1/2 0) (point " + k +
            " 5/3))\n";
  }
  return text;
}

void BM_Batch(benchmark::State &state, pga::Execution exec) {
  const std::string text = batch_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = pga::expr::run_batch(text, pga::expr::OutputMode::Text, exec);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0) * 2);
}

} // namespace

BENCHMARK_CAPTURE(BM_Suite, triangle_serial, std::string("triangle"),
                  pga::Execution::Serial);
BENCHMARK_CAPTURE(BM_Suite, triangle_parallel, std::string("triangle"),
                  pga::Execution::Parallel);
BENCHMARK_CAPTURE(BM_Suite, associativity_serial, std::string("associativity"),
                  pga::Execution::Serial);
BENCHMARK_CAPTURE(BM_Suite, associativity_parallel,
                  std::string("associativity"), pga::Execution::Parallel);
BENCHMARK_CAPTURE(BM_Batch, serial, pga::Execution::Serial)->Arg(500);
BENCHMARK_CAPTURE(BM_Batch, parallel, pga::Execution::Parallel)->Arg(500);

BENCHMARK_MAIN();
