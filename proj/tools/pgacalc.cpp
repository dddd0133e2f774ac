// pgacalc: exact calculator for plane projective geometric algebra.
//
//   pgacalc eval "(quadrance (point 0 0) (point 3 4))"
//   pgacalc batch expressions.txt
//   pgacalc selftest

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pga/expr.hpp"
#include "pga/runner.hpp"

namespace {

int run_eval(const std::string &source, pga::expr::OutputMode mode) {
  const auto out = pga::expr::eval_to_string(source, mode);
  const bool to_stdout = out.ok || mode == pga::expr::OutputMode::Structured;
  (to_stdout ? std::cout : std::cerr) << out.text << '\n';
  return out.ok ? 0 : 1;
}

int run_batch(const std::string &path, pga::expr::OutputMode mode,
              pga::Execution exec) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << '\n';
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const auto result = pga::expr::run_batch(buf.str(), mode, exec);
  for (const auto &line : result.lines)
    std::cout << line << '\n';
  return result.errors == 0 ? 0 : 1;
}

int run_selftest(std::uint64_t seed, pga::Execution exec) {
  using namespace pga::verify;
  const auto results = run_suites(all_suites(), seed, exec);
  std::size_t suites_ok = 0;
  std::size_t cases = 0;
  std::size_t passed = 0;
  for (const auto &r : results) {
    cases += r.cases;
    passed += r.passed;
    if (r.ok())
      ++suites_ok;
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ' ' << r.passed
              << '/' << r.cases << '\n';
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i)
      std::cout << "  case " << r.failures[i].index << ": "
                << r.failures[i].message << '\n';
  }
  std::cout << suites_ok << '/' << results.size() << " suites passed, "
            << passed << '/' << cases << " cases passed\n";
  return suites_ok == results.size() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact plane projective geometric algebra calculator"};
  app.require_subcommand(1);

  bool structured = false;
  bool serial = false;
  app.add_flag("--structured", structured, "Emit one JSON record per result");
  app.add_flag("--serial", serial, "Disable OpenMP for batch and selftest");

  std::string source;
  auto *eval = app.add_subcommand("eval", "Evaluate one expression");
  eval->add_option("expr", source, "S-expression")->required();

  std::string path;
  auto *batch = app.add_subcommand("batch", "Evaluate one expression per line");
  batch->add_option("path", path, "Input file")->required();

  std::uint64_t seed = pga::verify::kDefaultSeed;
  auto *selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->add_option("--seed", seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  const auto mode = structured ? pga::expr::OutputMode::Structured
                               : pga::expr::OutputMode::Text;
  const auto exec = serial ? pga::Execution::Serial : pga::Execution::Parallel;

  if (*eval)
    return run_eval(source, mode);
  if (*batch)
    return run_batch(path, mode, exec);
  return run_selftest(seed, exec);
}
