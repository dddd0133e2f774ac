#include "pga/random.hpp"

#include <array>

namespace pga::verify {

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t case_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32)};
  engine_.seed(seq);
}

std::int64_t CaseRng::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational CaseRng::rational(std::int64_t bound, std::int64_t max_den) {
  const std::int64_t den = integer(1, max_den);
  return {integer(-bound * den, bound * den), den};
}

Rational CaseRng::nonzero_rational(std::int64_t bound, std::int64_t max_den) {
  for (;;) {
    Rational r = rational(bound, max_den);
    if (!r.is_zero())
      return r;
  }
}

Multivector CaseRng::multivector() {
  std::array<Rational, kBladeCount> c;
  for (auto &x : c)
    x = rational();
  return Multivector(std::move(c));
}

Multivector CaseRng::vector() {
  Multivector m;
  m[Blade::e0] = rational();
  m[Blade::e1] = rational();
  m[Blade::e2] = rational();
  return m;
}

oracle::CoordPoint CaseRng::coord_point() { return {rational(), rational()}; }

oracle::CoordLine CaseRng::coord_line() {
  for (;;) {
    oracle::CoordLine l{rational(), rational(), rational()};
    if (!l.a.is_zero() || !l.b.is_zero())
      return l;
  }
}

Point CaseRng::point(const oracle::CoordPoint &p) const {
  return point_from_xy(p.x, p.y);
}

Line CaseRng::line(const oracle::CoordLine &l) const {
  return line_from_abc(l.a, l.b, l.c);
}

std::array<oracle::CoordPoint, 3> CaseRng::triangle() {
  for (;;) {
    std::array<oracle::CoordPoint, 3> t{coord_point(), coord_point(),
                                        coord_point()};
    if (!oracle::area2_det(t[0], t[1], t[2]).is_zero())
      return t;
  }
}

} // namespace pga::verify
