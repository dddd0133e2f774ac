#include "pga/geometry.hpp"

namespace pga {

Line::Line(Multivector m) : mv_(std::move(m)) {
  if (!mv_.is_grade(1) || mv_.is_zero())
    throw Error(ErrorKind::GradeMismatch,
                "expected a nonzero 1-vector (line), got [" + mv_.str() + "]");
}

Rational Line::norm_squared() const { return a() * a() + b() * b(); }

Point::Point(Multivector m) : mv_(std::move(m)) {
  if (!mv_.is_grade(2) || mv_.is_zero())
    throw Error(ErrorKind::GradeMismatch,
                "expected a nonzero 2-vector (point), got [" + mv_.str() + "]");
}

Point point_from_xy(const Rational &x, const Rational &y) {
  return point_from_xyz(x, y, Rational{1});
}

Point point_from_xyz(const Rational &x, const Rational &y, const Rational &z) {
  Multivector m;
  m[Blade::E0] = z;
  m[Blade::E1] = x;
  m[Blade::E2] = y;
  return Point(std::move(m));
}

Line line_from_abc(const Rational &a, const Rational &b, const Rational &c) {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw Error(ErrorKind::InvalidArgument, "line coefficients all zero");
  Multivector m;
  m[Blade::e0] = c;
  m[Blade::e1] = a;
  m[Blade::e2] = b;
  return Line(std::move(m));
}

Point normalize_point(const Point &p) {
  if (is_ideal_point(p))
    throw Error(ErrorKind::IdealPoint,
                "cannot normalize ideal point [" + p.mv().str() + "]");
  const Rational w = p.weight();
  return point_from_xy(p.x() / w, p.y() / w);
}

bool is_null_line(const Line &l) { return l.norm_squared().is_zero(); }

bool is_ideal_point(const Point &p) { return p.weight().is_zero(); }

bool incident(const Point &p, const Line &l) {
  return wedge(p.mv(), l.mv()).is_zero();
}

bool projectively_equal(const Point &p, const Point &q) {
  return projectively_equal(p.mv(), q.mv());
}

bool projectively_equal(const Line &l, const Line &m) {
  return projectively_equal(l.mv(), m.mv());
}

} // namespace pga
