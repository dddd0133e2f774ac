#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pga/rational.hpp"

namespace pga {

/// Basis blades of Cl(2,0,1) in storage order. Lines are grade 1, points are
/// grade 2 (E0 = e1e2, E1 = e2e0, E2 = e0e1) and I = e0e1e2.
enum class Blade : std::uint8_t { S, e0, e1, e2, E0, E1, E2, I };

inline constexpr std::size_t kBladeCount = 8;

constexpr std::size_t index(Blade b) { return static_cast<std::size_t>(b); }

constexpr int grade_of(Blade b) {
  constexpr std::array<int, kBladeCount> grades{0, 1, 1, 1, 2, 2, 2, 3};
  return grades[index(b)];
}

std::string_view blade_name(Blade b);

/// One entry of the blade multiplication table: blade_a * blade_b is
/// `sign * result`, with sign in {-1, 0, 1}.
struct BladeProduct {
  int sign;
  Blade result;
};

namespace detail {

// Generator bitmask (bit i = e_i) and the sign relating each basis blade to
// the ascending product of its generators.
inline constexpr std::array<unsigned, kBladeCount> kMask{0b000, 0b001, 0b010,
                                                         0b100, 0b110, 0b101,
                                                         0b011, 0b111};
inline constexpr std::array<int, kBladeCount> kOrientation{1, 1, 1, 1,
                                                           1, -1, 1, 1};
// Square of each generator: e0^2 = 0, e1^2 = e2^2 = 1.
inline constexpr std::array<int, 3> kMetric{0, 1, 1};

constexpr Blade blade_from_mask(unsigned mask) {
  for (std::size_t i = 0; i < kBladeCount; ++i)
    if (kMask[i] == mask)
      return static_cast<Blade>(i);
  return Blade::S;
}

// Sign from moving the generators of b past those of a into ascending order.
constexpr int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned i = 0; i < 3; ++i)
    if (a & (1u << i))
      for (unsigned j = 0; j < i; ++j)
        if (b & (1u << j))
          ++swaps;
  return swaps % 2 == 0 ? 1 : -1;
}

constexpr BladeProduct multiply(Blade a, Blade b, bool outer_only) {
  const unsigned ma = kMask[index(a)];
  const unsigned mb = kMask[index(b)];
  const unsigned common = ma & mb;
  if (outer_only && common != 0)
    return {0, Blade::S};
  int sign = reorder_sign(ma, mb);
  for (unsigned i = 0; i < 3; ++i)
    if (common & (1u << i))
      sign *= kMetric[i];
  const Blade r = blade_from_mask(ma ^ mb);
  sign *= kOrientation[index(a)] * kOrientation[index(b)] *
          kOrientation[index(r)];
  return {sign, r};
}

template <bool OuterOnly> constexpr auto make_table() {
  std::array<std::array<BladeProduct, kBladeCount>, kBladeCount> t{};
  for (std::size_t i = 0; i < kBladeCount; ++i)
    for (std::size_t j = 0; j < kBladeCount; ++j)
      t[i][j] = multiply(static_cast<Blade>(i), static_cast<Blade>(j),
                         OuterOnly);
  return t;
}

} // namespace detail

/// Geometric product table, generated from the generator rules.
inline constexpr auto kGeometricTable = detail::make_table<false>();
/// Outer (wedge) product table: the geometric table restricted to blades
/// with disjoint generators.
inline constexpr auto kWedgeTable = detail::make_table<true>();

/// Grade index in {0, 1, 2, 3}.
class Grade {
public:
  explicit Grade(int k);
  int value() const { return k_; }

private:
  int k_;
};

/// General element of Cl(2,0,1): eight exact coefficients in the order
/// 1, e0, e1, e2, E0, E1, E2, I.
class Multivector {
public:
  Multivector() = default;
  explicit Multivector(std::array<Rational, kBladeCount> coeffs)
      : c_(std::move(coeffs)) {}

  static Multivector scalar(const Rational &s);
  static Multivector blade(Blade b, const Rational &coeff = Rational{1});

  /// Reads 8 whitespace-separated rationals in basis order.
  static Multivector parse(std::string_view text);
  /// 8 rationals in basis order separated by single spaces.
  std::string str() const;

  const Rational &operator[](Blade b) const { return c_[index(b)]; }
  Rational &operator[](Blade b) { return c_[index(b)]; }
  const std::array<Rational, kBladeCount> &coeffs() const { return c_; }

  bool is_zero() const;
  /// True when every nonzero coefficient has grade k (zero counts).
  bool is_grade(int k) const;
  /// True when every nonzero coefficient has even grade.
  bool is_even() const;

  Multivector operator-() const;
  Multivector &operator+=(const Multivector &o);
  Multivector &operator-=(const Multivector &o);

  friend Multivector operator+(Multivector a, const Multivector &b) {
    return a += b;
  }
  friend Multivector operator-(Multivector a, const Multivector &b) {
    return a -= b;
  }
  friend bool operator==(const Multivector &a, const Multivector &b) {
    return a.c_ == b.c_;
  }

private:
  std::array<Rational, kBladeCount> c_{};
};

std::ostream &operator<<(std::ostream &os, const Multivector &m);

Multivector add(const Multivector &a, const Multivector &b);
Multivector scale(const Rational &s, const Multivector &a);

Multivector geometric_product(const Multivector &a, const Multivector &b);
inline Multivector operator*(const Multivector &a, const Multivector &b) {
  return geometric_product(a, b);
}
inline Multivector operator*(const Rational &s, const Multivector &a) {
  return scale(s, a);
}

/// Outer product. On lines this is the meet: their intersection point.
Multivector wedge(const Multivector &a, const Multivector &b);

/// Coefficient-preserving complement 1<->I, e_i<->E_i. An involution.
Multivector dual(const Multivector &a);

/// Regressive product J(J(a) ^ J(b)). On points this is the joining line.
Multivector join(const Multivector &a, const Multivector &b);

Multivector grade_part(const Multivector &a, Grade k);

/// Inner product: for homogeneous a (grade r) and b (grade s) this is
/// <ab>_|r-s|, extended bilinearly over grade components. On two lines it is
/// the scalar a1*a2 + b1*b2; on a point and a line it is the perpendicular
/// line through the point.
Multivector dot(const Multivector &a, const Multivector &b);

/// Reversion: grades 0 and 1 fixed, grades 2 and 3 negated.
Multivector reverse(const Multivector &a);

Multivector square(const Multivector &a);

/// a = lambda * b for some nonzero rational lambda, or both zero.
bool projectively_equal(const Multivector &a, const Multivector &b);

} // namespace pga
