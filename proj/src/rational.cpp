#include "pga/rational.hpp"

#include <limits>
#include <ostream>

namespace pga {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::DivisionByZero: return "division by zero";
  case ErrorKind::InvalidArgument: return "invalid argument";
  case ErrorKind::GradeMismatch: return "grade mismatch";
  case ErrorKind::NullLine: return "null line";
  case ErrorKind::IdealPoint: return "ideal point";
  case ErrorKind::Coincident: return "coincident inputs";
  case ErrorKind::Perpendicular: return "perpendicular lines";
  case ErrorKind::Degenerate: return "degenerate configuration";
  case ErrorKind::Parse: return "parse error";
  case ErrorKind::Type: return "type error";
  }
  return "error";
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}

mpz_class to_mpz(std::int64_t n) {
  // mpz_class has no int64 constructor on every platform; go through text
  // only when the value does not fit a long.
  if (n >= std::numeric_limits<long>::min() &&
      n <= std::numeric_limits<long>::max())
    return mpz_class(static_cast<long>(n));
  return mpz_class(std::to_string(n));
}

} // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0)
    throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw Error(ErrorKind::Parse,
                "malformed rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw Error(ErrorKind::DivisionByZero,
                "rational literal '" + std::string(text) +
                    "' has zero denominator");
  if (negative)
    n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return from_gmp(std::move(q));
}

Rational Rational::from_gmp(mpq_class q) {
  Rational r;
  r.value_ = std::move(q);
  return r;
}

Rational Rational::operator-() const { return from_gmp(-value_); }

Rational Rational::abs() const { return from_gmp(::abs(value_)); }

Rational Rational::reciprocal() const {
  if (is_zero())
    throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  return from_gmp(1 / value_);
}

Rational &Rational::operator+=(const Rational &o) {
  value_ += o.value_;
  return *this;
}

Rational &Rational::operator-=(const Rational &o) {
  value_ -= o.value_;
  return *this;
}

Rational &Rational::operator*=(const Rational &o) {
  value_ *= o.value_;
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw Error(ErrorKind::DivisionByZero,
                "division of " + str() + " by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

Rational content(std::span<const Rational> values) {
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto &v : values) {
    if (v.is_zero())
      continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.gmp().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.gmp().get_den_mpz_t());
  }
  if (g == 0)
    return Rational{};
  mpq_class q(g, l);
  q.canonicalize();
  return Rational::from_gmp(std::move(q));
}

} // namespace pga
