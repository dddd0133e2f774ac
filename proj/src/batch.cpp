#include <cstdint>

#include "pga/expr.hpp"

namespace pga::expr {

namespace {

struct Pending {
  std::size_t line_number;
  std::string_view source;
};

struct Outcome {
  std::string text;
  bool ok = true;
  bool empty = false;
};

Outcome evaluate_line(const Pending &p, OutputMode mode) {
  try {
    const auto tokens = tokenize(p.source);
    if (tokens.empty())
      return {{}, true, true};
    return {format_value(evaluate(parse(tokens)), mode), true, false};
  } catch (const Error &e) {
    return {format_error(e, mode, p.line_number), false, false};
  }
}

} // namespace

BatchResult run_batch(std::string_view text, OutputMode mode,
                      Execution exec) {
  std::vector<Pending> pending;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    pending.push_back({number++, line});
    start = end + 1;
  }

  std::vector<Outcome> outcomes(pending.size());
  const auto n = static_cast<std::int64_t>(pending.size());
  if (exec == Execution::Serial) {
    for (std::int64_t i = 0; i < n; ++i)
      outcomes[i] = evaluate_line(pending[i], mode);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i)
      outcomes[i] = evaluate_line(pending[i], mode);
  }

  BatchResult r;
  for (auto &o : outcomes) {
    if (o.empty)
      continue;
    if (!o.ok)
      ++r.errors;
    r.lines.push_back(std::move(o.text));
  }
  return r;
}

} // namespace pga::expr
