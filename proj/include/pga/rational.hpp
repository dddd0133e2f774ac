#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pga/error.hpp"

namespace pga {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
///
/// Textual form is `p/q`, with the sign on `p` and `/q` omitted when q = 1.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n); // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses `-?\d+(/\d+)?`. Anything else, or a zero denominator, throws.
  static Rational parse(std::string_view text);

  std::string str() const { return value_.get_str(); }
  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  const mpq_class &gmp() const { return value_; }

  static Rational from_gmp(mpq_class q);

private:
  mpq_class value_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// Least common multiple of the denominators and gcd of the numerators of a
/// list of rationals; dividing by (gcd/lcm) yields coprime integers.
Rational content(std::span<const Rational> values);

} // namespace pga
