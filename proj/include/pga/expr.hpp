#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pga/execution.hpp"
#include "pga/isometry.hpp"

namespace pga::expr {

/// 1-based position in the input text.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const SourcePos &, const SourcePos &) = default;
};

enum class TokenKind { LParen, RParen, Symbol, Number };

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
};

/// Splits input into parens, symbols (a letter followed by letters, digits,
/// '-', '?', '!' or '_') and rational literals `-?\d+(/\d+)?`. `;` starts a
/// comment running to end of line. Any other character throws a Parse error
/// naming its line and column.
std::vector<Token> tokenize(std::string_view input);

struct Expr;

struct PointLit {
  Rational x, y;
};
struct IdealPointLit {
  Rational dx, dy;
};
struct LineLit {
  Rational a, b, c;
};
struct MvLit {
  Multivector value;
};
struct BoolLit {
  bool value;
};
struct Call {
  std::string op;
  std::vector<Expr> args;
};

struct Expr {
  std::variant<Rational, PointLit, IdealPointLit, LineLit, MvLit, BoolLit,
               Call>
      node;
  SourcePos pos;
};

/// Parses exactly one expression. Unbalanced parens, unknown operators,
/// wrong arity and non-rational literal arguments throw Parse errors with
/// their position.
Expr parse(std::span<const Token> tokens);
Expr parse(std::string_view text);

/// Canonical source text of an expression.
std::string unparse(const Expr &e);

/// Every operator accepted in call position.
std::vector<std::string_view> operator_names();

using Value = std::variant<Rational, Point, Line, Multivector, Versor, bool>;

/// Evaluates over the exact kernel. Domain and type errors are rethrown with
/// the offending sub-expression attached.
Value evaluate(const Expr &e);

/// Parse and evaluate in one step.
Value evaluate(std::string_view text);

/// Exact structural equality for rationals, booleans and multivectors;
/// projective equality for points, lines and versors.
bool same_value(const Value &a, const Value &b);

enum class OutputMode { Text, Structured };

/// Text: `p/q`, `(point x y)` normalized or `(ideal-point dx dy)`,
/// `(line a b c)` as coprime integers with positive leading coefficient,
/// `(mv c0 ... c7)`, `(reflection L)` / `(rotor L M)`, `true`/`false`.
/// Structured: one-line JSON record with `kind` and string-encoded `value`.
std::string format_value(const Value &v, OutputMode mode);

/// `error: [line N: ]message` or a structured error record.
std::string format_error(const std::exception &e, OutputMode mode,
                         std::optional<std::size_t> line = std::nullopt);

/// Canonical integer representative of a line: coprime integers with the
/// first nonzero of (a, b, c) positive.
std::array<Rational, 3> canonical_line(const Line &l);

/// Formats and evaluates a single expression; `ok` is false on error.
struct EvalOutput {
  std::string text;
  bool ok;
};
EvalOutput eval_to_string(std::string_view text, OutputMode mode);

/// One output line per expression line of the batch input. Blank and
/// comment-only lines produce nothing.
struct BatchResult {
  std::vector<std::string> lines;
  std::size_t errors = 0;
};
BatchResult run_batch(std::string_view text, OutputMode mode,
                      Execution exec = Execution::Parallel);

} // namespace pga::expr
