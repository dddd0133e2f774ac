#pragma once

#include "pga/multivector.hpp"

namespace pga {

/// The line a*x + b*y + c = 0, stored as the 1-vector c*e0 + a*e1 + b*e2.
/// Lines are never normalized.
class Line {
public:
  /// Throws GradeMismatch unless m is a nonzero pure 1-vector.
  explicit Line(Multivector m);

  const Multivector &mv() const { return mv_; }
  const Rational &a() const { return mv_[Blade::e1]; }
  const Rational &b() const { return mv_[Blade::e2]; }
  const Rational &c() const { return mv_[Blade::e0]; }

  /// a^2 + b^2, the scalar square of the line.
  Rational norm_squared() const;

  friend bool operator==(const Line &, const Line &) = default;

private:
  Multivector mv_;
};

/// The homogeneous point (x, y, z), stored as z*E0 + x*E1 + y*E2.
class Point {
public:
  /// Throws GradeMismatch unless m is a nonzero pure 2-vector.
  explicit Point(Multivector m);

  const Multivector &mv() const { return mv_; }
  const Rational &weight() const { return mv_[Blade::E0]; }
  const Rational &x() const { return mv_[Blade::E1]; }
  const Rational &y() const { return mv_[Blade::E2]; }

  friend bool operator==(const Point &, const Point &) = default;

private:
  Multivector mv_;
};

Point point_from_xy(const Rational &x, const Rational &y);
Point point_from_xyz(const Rational &x, const Rational &y, const Rational &z);
Line line_from_abc(const Rational &a, const Rational &b, const Rational &c);

/// Divides by the weight. Only division is needed: a euclidean point
/// normalizes rationally. Throws IdealPoint for weight 0.
Point normalize_point(const Point &p);

/// a^2 + b^2 = 0, i.e. a multiple of e0.
bool is_null_line(const Line &l);
bool is_ideal_point(const Point &p);

/// P ^ l = 0.
bool incident(const Point &p, const Line &l);

bool projectively_equal(const Point &p, const Point &q);
bool projectively_equal(const Line &l, const Line &m);

} // namespace pga
