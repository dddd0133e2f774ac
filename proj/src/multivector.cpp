#include "pga/multivector.hpp"

#include <ostream>
#include <sstream>

namespace pga {

namespace {

constexpr std::array<std::string_view, kBladeCount> kNames{
    "1", "e0", "e1", "e2", "E0", "E1", "E2", "I"};

// Signature sanity: the squares fixed by the algebra.
static_assert(kGeometricTable[index(Blade::e0)][index(Blade::e0)].sign == 0);
static_assert(kGeometricTable[index(Blade::e1)][index(Blade::e1)].sign == 1);
static_assert(kGeometricTable[index(Blade::E0)][index(Blade::E0)].sign == -1);
static_assert(kGeometricTable[index(Blade::E1)][index(Blade::E1)].sign == 0);
static_assert(kGeometricTable[index(Blade::I)][index(Blade::I)].sign == 0);

template <typename Table>
Multivector table_product(const Table &table, const Multivector &a,
                          const Multivector &b) {
  Multivector out;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const Rational &ai = a.coeffs()[i];
    if (ai.is_zero())
      continue;
    for (std::size_t j = 0; j < kBladeCount; ++j) {
      const BladeProduct p = table[i][j];
      const Rational &bj = b.coeffs()[j];
      if (p.sign == 0 || bj.is_zero())
        continue;
      if (p.sign > 0)
        out[p.result] += ai * bj;
      else
        out[p.result] -= ai * bj;
    }
  }
  return out;
}

Multivector homogeneous_part(const Multivector &a, int k) {
  Multivector out;
  for (std::size_t i = 0; i < kBladeCount; ++i)
    if (grade_of(static_cast<Blade>(i)) == k)
      out[static_cast<Blade>(i)] = a.coeffs()[i];
  return out;
}

} // namespace

std::string_view blade_name(Blade b) { return kNames[index(b)]; }

Grade::Grade(int k) : k_(k) {
  if (k < 0 || k > 3)
    throw Error(ErrorKind::InvalidArgument,
                "grade " + std::to_string(k) + " outside 0..3");
}

Multivector Multivector::scalar(const Rational &s) {
  return blade(Blade::S, s);
}

Multivector Multivector::blade(Blade b, const Rational &coeff) {
  Multivector m;
  m[b] = coeff;
  return m;
}

Multivector Multivector::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::array<Rational, kBladeCount> c;
  std::string tok;
  std::size_t n = 0;
  while (in >> tok) {
    if (n == kBladeCount)
      throw Error(ErrorKind::Parse, "multivector has more than 8 coefficients");
    c[n++] = Rational::parse(tok);
  }
  if (n != kBladeCount)
    throw Error(ErrorKind::Parse, "multivector needs 8 coefficients, got " +
                                      std::to_string(n));
  return Multivector(std::move(c));
}

std::string Multivector::str() const {
  std::string s;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    if (i)
      s += ' ';
    s += c_[i].str();
  }
  return s;
}

bool Multivector::is_zero() const {
  for (const auto &c : c_)
    if (!c.is_zero())
      return false;
  return true;
}

bool Multivector::is_grade(int k) const {
  for (std::size_t i = 0; i < kBladeCount; ++i)
    if (!c_[i].is_zero() && grade_of(static_cast<Blade>(i)) != k)
      return false;
  return true;
}

bool Multivector::is_even() const {
  for (std::size_t i = 0; i < kBladeCount; ++i)
    if (!c_[i].is_zero() && grade_of(static_cast<Blade>(i)) % 2 != 0)
      return false;
  return true;
}

Multivector Multivector::operator-() const {
  Multivector m = *this;
  for (auto &c : m.c_)
    c = -c;
  return m;
}

Multivector &Multivector::operator+=(const Multivector &o) {
  for (std::size_t i = 0; i < kBladeCount; ++i)
    c_[i] += o.c_[i];
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &o) {
  for (std::size_t i = 0; i < kBladeCount; ++i)
    c_[i] -= o.c_[i];
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Multivector &m) {
  return os << m.str();
}

Multivector add(const Multivector &a, const Multivector &b) { return a + b; }

Multivector scale(const Rational &s, const Multivector &a) {
  std::array<Rational, kBladeCount> c;
  for (std::size_t i = 0; i < kBladeCount; ++i)
    c[i] = s * a.coeffs()[i];
  return Multivector(std::move(c));
}

Multivector geometric_product(const Multivector &a, const Multivector &b) {
  return table_product(kGeometricTable, a, b);
}

Multivector wedge(const Multivector &a, const Multivector &b) {
  return table_product(kWedgeTable, a, b);
}

Multivector dual(const Multivector &a) {
  const auto &c = a.coeffs();
  return Multivector({c[7], c[4], c[5], c[6], c[1], c[2], c[3], c[0]});
}

Multivector join(const Multivector &a, const Multivector &b) {
  return dual(wedge(dual(a), dual(b)));
}

Multivector grade_part(const Multivector &a, Grade k) {
  return homogeneous_part(a, k.value());
}

Multivector dot(const Multivector &a, const Multivector &b) {
  Multivector out;
  for (int r = 0; r <= 3; ++r) {
    const Multivector ar = homogeneous_part(a, r);
    if (ar.is_zero())
      continue;
    for (int s = 0; s <= 3; ++s) {
      const Multivector bs = homogeneous_part(b, s);
      if (bs.is_zero())
        continue;
      out += homogeneous_part(geometric_product(ar, bs), r > s ? r - s : s - r);
    }
  }
  return out;
}

Multivector reverse(const Multivector &a) {
  Multivector m = a;
  for (Blade b : {Blade::E0, Blade::E1, Blade::E2, Blade::I})
    m[b] = -m[b];
  return m;
}

Multivector square(const Multivector &a) { return geometric_product(a, a); }

bool projectively_equal(const Multivector &a, const Multivector &b) {
  const bool az = a.is_zero();
  const bool bz = b.is_zero();
  if (az || bz)
    return az && bz;
  // Fix lambda from the first coefficient where b is nonzero.
  std::size_t pivot = 0;
  while (b.coeffs()[pivot].is_zero())
    ++pivot;
  if (a.coeffs()[pivot].is_zero())
    return false;
  const Rational lambda = a.coeffs()[pivot] / b.coeffs()[pivot];
  for (std::size_t i = 0; i < kBladeCount; ++i)
    if (a.coeffs()[i] != lambda * b.coeffs()[i])
      return false;
  return true;
}

} // namespace pga
