#include "pga/rational_trig.hpp"

namespace pga {

namespace {

void require_proper(const Point &p) {
  if (is_ideal_point(p))
    throw Error(ErrorKind::IdealPoint,
                "quadrance needs proper points, got ideal point [" +
                    p.mv().str() + "]");
}

void require_non_null(const Line &l) {
  if (is_null_line(l))
    throw Error(ErrorKind::NullLine,
                "metric quantity undefined for null line [" + l.mv().str() +
                    "]");
}

// Scalar part of the square; every square in this file is a pure scalar.
Rational scalar_square(const Multivector &m) {
  return square(m)[Blade::S];
}

} // namespace

Quadrance quadrance(const Point &a, const Point &b) {
  require_proper(a);
  require_proper(b);
  const Rational num = scalar_square(join(a.mv(), b.mv()));
  const Rational den = scalar_square(a.mv()) * scalar_square(b.mv());
  return {num / den};
}

Spread spread(const Line &l, const Line &m) {
  require_non_null(l);
  require_non_null(m);
  const Rational num = -scalar_square(wedge(l.mv(), m.mv()));
  return {num / (l.norm_squared() * m.norm_squared())};
}

Rational cross(const Line &l, const Line &m) {
  require_non_null(l);
  require_non_null(m);
  const Rational d = dot(l.mv(), m.mv())[Blade::S];
  return d * d / (l.norm_squared() * m.norm_squared());
}

Rational twist(const Line &l, const Line &m) {
  require_non_null(l);
  require_non_null(m);
  const Rational d = dot(l.mv(), m.mv())[Blade::S];
  if (d.is_zero())
    throw Error(ErrorKind::Perpendicular,
                "twist undefined for perpendicular lines");
  return -scalar_square(wedge(l.mv(), m.mv())) / (d * d);
}

bool is_parallel(const Line &l, const Line &m) {
  return scalar_square(wedge(l.mv(), m.mv())).is_zero();
}

bool is_perpendicular(const Line &l, const Line &m) {
  return dot(l.mv(), m.mv()).is_zero();
}

bool collinear(const Point &a, const Point &b, const Point &c) {
  return join(join(a.mv(), b.mv()), c.mv()).is_zero();
}

bool concurrent(const Line &l, const Line &m, const Line &n) {
  return wedge(wedge(l.mv(), m.mv()), n.mv()).is_zero();
}

} // namespace pga
