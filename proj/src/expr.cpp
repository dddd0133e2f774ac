#include "pga/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "pga/constructions.hpp"

namespace pga::expr {

namespace {

std::string at(SourcePos p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

[[noreturn]] void parse_error(SourcePos p, const std::string &msg) {
  throw Error(ErrorKind::Parse, at(p) + ": " + msg);
}

bool symbol_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '-' ||
         c == '?' || c == '!' || c == '_';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

bool delimiter(char c) {
  return c == '(' || c == ')' || c == ';' ||
         std::isspace(static_cast<unsigned char>(c)) != 0;
}

// ---------------------------------------------------------------------------
// Evaluation helpers

std::string kind_name(const Value &v) {
  constexpr std::array<const char *, 6> names{
      "rational", "point", "line", "multivector", "versor", "boolean"};
  return names[v.index()];
}

class Args {
public:
  Args(const Call &call, std::vector<Value> values)
      : call_(call), values_(std::move(values)) {}

  const Value &operator[](std::size_t i) const { return values_[i]; }

  Rational rational(std::size_t i) const {
    if (const auto *r = std::get_if<Rational>(&values_[i]))
      return *r;
    if (const auto *m = std::get_if<Multivector>(&values_[i]);
        m && m->is_grade(0))
      return (*m)[Blade::S];
    type_error(i, "rational");
  }

  Multivector mv(std::size_t i) const {
    return std::visit(
        [&](const auto &v) -> Multivector {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>)
            return Multivector::scalar(v);
          else if constexpr (std::is_same_v<T, Multivector>)
            return v;
          else if constexpr (std::is_same_v<T, bool>)
            type_error(i, "multivector");
          else
            return v.mv();
        },
        values_[i]);
  }

  Point point(std::size_t i) const {
    if (const auto *p = std::get_if<Point>(&values_[i]))
      return *p;
    if (const auto *m = std::get_if<Multivector>(&values_[i]);
        m && m->is_grade(2) && !m->is_zero())
      return Point(*m);
    type_error(i, "point");
  }

  Line line(std::size_t i) const {
    if (const auto *l = std::get_if<Line>(&values_[i]))
      return *l;
    if (const auto *m = std::get_if<Multivector>(&values_[i]);
        m && m->is_grade(1) && !m->is_zero())
      return Line(*m);
    type_error(i, "line");
  }

  Versor versor(std::size_t i) const {
    if (const auto *v = std::get_if<Versor>(&values_[i]))
      return *v;
    type_error(i, "versor");
  }

  int small_integer(std::size_t i, int lo, int hi) const {
    const Rational r = rational(i);
    for (int k = lo; k <= hi; ++k)
      if (r == Rational{k})
        return k;
    throw Error(ErrorKind::InvalidArgument,
                "argument " + std::to_string(i + 1) + " of " + call_.op +
                    " must be an integer in " + std::to_string(lo) + ".." +
                    std::to_string(hi) + ", got " + r.str());
  }

private:
  [[noreturn]] void type_error(std::size_t i, const char *expected) const {
    throw Error(ErrorKind::Type,
                "argument " + std::to_string(i + 1) + " of " + call_.op +
                    ": expected " + expected + ", got " +
                    kind_name(values_[i]) + " " + unparse(call_.args[i]));
  }

  const Call &call_;
  std::vector<Value> values_;
};

// A sandwich keeps the category of its operand.
Value keep_kind(const Value &original, Multivector result) {
  if (std::holds_alternative<Point>(original))
    return Point(std::move(result));
  if (std::holds_alternative<Line>(original))
    return Line(std::move(result));
  return result;
}

using Handler = Value (*)(const Args &);

struct Operator {
  std::string_view name;
  std::size_t arity;
  Handler run;
};

// clang-format off
const std::array kOperators{
    // kernel
    Operator{"gp", 2, [](const Args &a) -> Value { return geometric_product(a.mv(0), a.mv(1)); }},
    Operator{"wedge", 2, [](const Args &a) -> Value { return wedge(a.mv(0), a.mv(1)); }},
    Operator{"vee", 2, [](const Args &a) -> Value { return join(a.mv(0), a.mv(1)); }},
    Operator{"dot", 2, [](const Args &a) -> Value { return dot(a.mv(0), a.mv(1)); }},
    Operator{"grade", 2, [](const Args &a) -> Value { return grade_part(a.mv(0), Grade(a.small_integer(1, 0, 3))); }},
    Operator{"reverse", 1, [](const Args &a) -> Value { return reverse(a.mv(0)); }},
    Operator{"dual", 1, [](const Args &a) -> Value { return dual(a.mv(0)); }},
    Operator{"square", 1, [](const Args &a) -> Value { return square(a.mv(0)); }},
    Operator{"scale", 2, [](const Args &a) -> Value { return scale(a.rational(0), a.mv(1)); }},
    Operator{"add", 2, [](const Args &a) -> Value {
      if (std::holds_alternative<Rational>(a[0]) && std::holds_alternative<Rational>(a[1]))
        return a.rational(0) + a.rational(1);
      return a.mv(0) + a.mv(1); }},
    Operator{"sub", 2, [](const Args &a) -> Value {
      if (std::holds_alternative<Rational>(a[0]) && std::holds_alternative<Rational>(a[1]))
        return a.rational(0) - a.rational(1);
      return a.mv(0) - a.mv(1); }},
    Operator{"neg", 1, [](const Args &a) -> Value {
      if (std::holds_alternative<Rational>(a[0]))
        return -a.rational(0);
      return -a.mv(0); }},
    Operator{"mul", 2, [](const Args &a) -> Value { return a.rational(0) * a.rational(1); }},
    Operator{"div", 2, [](const Args &a) -> Value { return a.rational(0) / a.rational(1); }},
    Operator{"proj-equal?", 2, [](const Args &a) -> Value { return projectively_equal(a.mv(0), a.mv(1)); }},
    // geometry
    Operator{"normalize", 1, [](const Args &a) -> Value { return normalize_point(a.point(0)); }},
    Operator{"incident?", 2, [](const Args &a) -> Value { return incident(a.point(0), a.line(1)); }},
    Operator{"ideal?", 1, [](const Args &a) -> Value { return is_ideal_point(a.point(0)); }},
    Operator{"null?", 1, [](const Args &a) -> Value { return is_null_line(a.line(0)); }},
    // rational trigonometry
    Operator{"quadrance", 2, [](const Args &a) -> Value { return quadrance(a.point(0), a.point(1)).value; }},
    Operator{"spread", 2, [](const Args &a) -> Value { return spread(a.line(0), a.line(1)).value; }},
    Operator{"cross", 2, [](const Args &a) -> Value { return cross(a.line(0), a.line(1)); }},
    Operator{"twist", 2, [](const Args &a) -> Value { return twist(a.line(0), a.line(1)); }},
    Operator{"parallel?", 2, [](const Args &a) -> Value { return is_parallel(a.line(0), a.line(1)); }},
    Operator{"perpendicular?", 2, [](const Args &a) -> Value { return is_perpendicular(a.line(0), a.line(1)); }},
    Operator{"collinear?", 3, [](const Args &a) -> Value { return collinear(a.point(0), a.point(1), a.point(2)); }},
    Operator{"concurrent?", 3, [](const Args &a) -> Value { return concurrent(a.line(0), a.line(1), a.line(2)); }},
    // constructions
    Operator{"join", 2, [](const Args &a) -> Value { return join_points(a.point(0), a.point(1)); }},
    Operator{"meet", 2, [](const Args &a) -> Value { return meet_lines(a.line(0), a.line(1)); }},
    Operator{"altitude", 2, [](const Args &a) -> Value { return altitude(a.point(0), a.line(1)); }},
    Operator{"parallel-through", 2, [](const Args &a) -> Value { return parallel_through(a.point(0), a.line(1)); }},
    Operator{"foot", 2, [](const Args &a) -> Value { return foot(a.point(0), a.line(1)); }},
    Operator{"midpoint", 2, [](const Args &a) -> Value { return midpoint(a.point(0), a.point(1)); }},
    Operator{"perp-bisector", 2, [](const Args &a) -> Value { return perpendicular_bisector(a.point(0), a.point(1)); }},
    Operator{"area2", 3, [](const Args &a) -> Value { return signed_area2(a.point(0), a.point(1), a.point(2)); }},
    Operator{"centroid", 3, [](const Args &a) -> Value { return centroid(Triangle(a.point(0), a.point(1), a.point(2))); }},
    Operator{"side", 4, [](const Args &a) -> Value {
      return side(Triangle::allow_degenerate(a.point(0), a.point(1), a.point(2)), a.small_integer(3, 1, 3)); }},
    Operator{"median", 4, [](const Args &a) -> Value {
      return median(Triangle::allow_degenerate(a.point(0), a.point(1), a.point(2)), a.small_integer(3, 1, 3)); }},
    // isometries
    Operator{"reflection", 1, [](const Args &a) -> Value { return reflection(a.line(0)); }},
    Operator{"rotor", 2, [](const Args &a) -> Value { return rotor(a.line(0), a.line(1)); }},
    Operator{"reflect", 2, [](const Args &a) -> Value { return keep_kind(a[1], reflect(a.line(0), a.mv(1))); }},
    Operator{"apply", 2, [](const Args &a) -> Value { return keep_kind(a[1], apply(a.versor(0), a.mv(1))); }},
    Operator{"rotor-scalar", 1, [](const Args &a) -> Value { return rotor_scalar_part(a.versor(0)); }},
    Operator{"rotor-point", 1, [](const Args &a) -> Value { return rotor_point_part(a.versor(0)); }},
};
// clang-format on

const Operator *find_operator(std::string_view name) {
  for (const auto &op : kOperators)
    if (op.name == name)
      return &op;
  return nullptr;
}

} // namespace

std::vector<std::string_view> operator_names() {
  std::vector<std::string_view> names;
  for (const auto &op : kOperators)
    names.push_back(op.name);
  return names;
}

namespace {

struct LiteralForm {
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<LiteralForm, 4> kLiterals{{{"point", 2},
                                                {"ideal-point", 2},
                                                {"line", 3},
                                                {"mv", 8}}};

// ---------------------------------------------------------------------------

class Parser {
public:
  explicit Parser(std::span<const Token> tokens) : t_(tokens) {}

  Expr parse_one() {
    if (t_.empty())
      parse_error({}, "empty input");
    Expr e = expr();
    if (i_ != t_.size())
      parse_error(t_[i_].pos, "unexpected '" + t_[i_].text +
                                  "' after a complete expression");
    return e;
  }

private:
  Expr expr() {
    if (i_ == t_.size())
      parse_error(t_.back().pos, "unexpected end of input");
    const Token &tok = t_[i_++];
    switch (tok.kind) {
    case TokenKind::Number:
      return {Rational::parse(tok.text), tok.pos};
    case TokenKind::Symbol:
      if (tok.text == "true")
        return {BoolLit{true}, tok.pos};
      if (tok.text == "false")
        return {BoolLit{false}, tok.pos};
      parse_error(tok.pos, "unknown symbol '" + tok.text + "'");
    case TokenKind::RParen:
      parse_error(tok.pos, "unbalanced ')'");
    case TokenKind::LParen:
      break;
    }
    return form(tok.pos);
  }

  Expr form(SourcePos open) {
    if (i_ == t_.size())
      parse_error(open, "unbalanced '('");
    const Token &head = t_[i_++];
    if (head.kind != TokenKind::Symbol)
      parse_error(head.pos, "expected an operator name after '('");

    std::vector<Expr> args;
    while (true) {
      if (i_ == t_.size())
        parse_error(open, "unbalanced '('");
      if (t_[i_].kind == TokenKind::RParen) {
        ++i_;
        break;
      }
      args.push_back(expr());
    }

    for (const auto &lit : kLiterals)
      if (lit.name == head.text)
        return literal(lit, open, args);

    const Operator *op = find_operator(head.text);
    if (!op)
      parse_error(head.pos, "unknown operator '" + head.text + "'");
    check_arity(head.text, op->arity, args.size(), open);
    return {Call{head.text, std::move(args)}, open};
  }

  static void check_arity(const std::string &name, std::size_t want,
                          std::size_t got, SourcePos pos) {
    if (want != got)
      parse_error(pos, name + " takes " + std::to_string(want) +
                           " argument" + (want == 1 ? "" : "s") + ", got " +
                           std::to_string(got));
  }

  static Expr literal(const LiteralForm &lit, SourcePos pos,
                      const std::vector<Expr> &args) {
    check_arity(std::string(lit.name), lit.arity, args.size(), pos);
    std::vector<Rational> r;
    for (const auto &a : args) {
      const auto *q = std::get_if<Rational>(&a.node);
      if (!q)
        parse_error(a.pos, std::string(lit.name) +
                               " takes rational literals only");
      r.push_back(*q);
    }
    if (lit.name == "point")
      return {PointLit{r[0], r[1]}, pos};
    if (lit.name == "ideal-point")
      return {IdealPointLit{r[0], r[1]}, pos};
    if (lit.name == "line")
      return {LineLit{r[0], r[1], r[2]}, pos};
    std::array<Rational, kBladeCount> c;
    std::copy(r.begin(), r.end(), c.begin());
    return {MvLit{Multivector(std::move(c))}, pos};
  }

  std::span<const Token> t_;
  std::size_t i_ = 0;
};

} // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (input[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };

  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == ';') {
      while (i < input.size() && input[i] != '\n')
        advance(1);
    } else if (c == '(' || c == ')') {
      out.push_back({c == '(' ? TokenKind::LParen : TokenKind::RParen,
                     std::string(1, c), pos});
      advance(1);
    } else if (symbol_start(c)) {
      std::size_t j = i;
      while (j < input.size() && symbol_char(input[j]))
        ++j;
      if (j < input.size() && !delimiter(input[j])) {
        SourcePos bad = pos;
        bad.column += j - i;
        parse_error(bad, std::string("illegal character '") + input[j] + "'");
      }
      out.push_back({TokenKind::Symbol, std::string(input.substr(i, j - i)),
                     pos});
      advance(j - i);
    } else if (digit(c) ||
               (c == '-' && i + 1 < input.size() && digit(input[i + 1]))) {
      std::size_t j = i + 1;
      while (j < input.size() && digit(input[j]))
        ++j;
      if (j < input.size() && input[j] == '/') {
        if (j + 1 >= input.size() || !digit(input[j + 1])) {
          SourcePos bad = pos;
          bad.column += j - i;
          parse_error(bad, "'/' must be followed by a denominator");
        }
        j += 2;
        while (j < input.size() && digit(input[j]))
          ++j;
      }
      if (j < input.size() && !delimiter(input[j])) {
        SourcePos bad = pos;
        bad.column += j - i;
        parse_error(bad, std::string("illegal character '") + input[j] + "'");
      }
      out.push_back({TokenKind::Number, std::string(input.substr(i, j - i)),
                     pos});
      advance(j - i);
    } else {
      parse_error(pos, std::string("illegal character '") + c + "'");
    }
  }
  return out;
}

Expr parse(std::span<const Token> tokens) { return Parser(tokens).parse_one(); }

Expr parse(std::string_view text) {
  const auto tokens = tokenize(text);
  return parse(tokens);
}

std::string unparse(const Expr &e) {
  return std::visit(
      [](const auto &n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Rational>)
          return n.str();
        else if constexpr (std::is_same_v<T, PointLit>)
          return "(point " + n.x.str() + " " + n.y.str() + ")";
        else if constexpr (std::is_same_v<T, IdealPointLit>)
          return "(ideal-point " + n.dx.str() + " " + n.dy.str() + ")";
        else if constexpr (std::is_same_v<T, LineLit>)
          return "(line " + n.a.str() + " " + n.b.str() + " " + n.c.str() +
                 ")";
        else if constexpr (std::is_same_v<T, MvLit>)
          return "(mv " + n.value.str() + ")";
        else if constexpr (std::is_same_v<T, BoolLit>)
          return n.value ? "true" : "false";
        else {
          std::string s = "(" + n.op;
          for (const auto &a : n.args)
            s += " " + unparse(a);
          return s + ")";
        }
      },
      e.node);
}

Value evaluate(const Expr &e) {
  return std::visit(
      [&](const auto &n) -> Value {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Rational>)
          return n;
        else if constexpr (std::is_same_v<T, PointLit>)
          return point_from_xy(n.x, n.y);
        else if constexpr (std::is_same_v<T, IdealPointLit>) {
          if (n.dx.is_zero() && n.dy.is_zero())
            throw Error(ErrorKind::InvalidArgument,
                        at(e.pos) + ": ideal point with zero direction");
          return point_from_xyz(n.dx, n.dy, Rational{0});
        } else if constexpr (std::is_same_v<T, LineLit>) {
          try {
            return line_from_abc(n.a, n.b, n.c);
          } catch (const Error &err) {
            throw Error(err.kind(), at(e.pos) + ": " + err.what());
          }
        } else if constexpr (std::is_same_v<T, MvLit>)
          return n.value;
        else if constexpr (std::is_same_v<T, BoolLit>)
          return n.value;
        else {
          std::vector<Value> values;
          values.reserve(n.args.size());
          for (const auto &a : n.args)
            values.push_back(evaluate(a));
          const Operator *op = find_operator(n.op);
          if (!op)
            parse_error(e.pos, "unknown operator '" + n.op + "'");
          try {
            return op->run(Args(n, std::move(values)));
          } catch (const Error &err) {
            throw Error(err.kind(), "in " + unparse(e) + " at " + at(e.pos) +
                                        ": " + err.what());
          }
        }
      },
      e.node);
}

Value evaluate(std::string_view text) { return evaluate(parse(text)); }

bool same_value(const Value &a, const Value &b) {
  if (a.index() != b.index())
    return false;
  return std::visit(
      [&](const auto &x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T &y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Point> || std::is_same_v<T, Line>)
          return projectively_equal(x, y);
        else if constexpr (std::is_same_v<T, Versor>)
          return x.parity() == y.parity() &&
                 projectively_equal(x.mv(), y.mv());
        else
          return x == y;
      },
      a);
}

} // namespace pga::expr
