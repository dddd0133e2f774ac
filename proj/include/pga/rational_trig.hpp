#pragma once

#include "pga/geometry.hpp"

namespace pga {

/// Squared distance between two points.
struct Quadrance {
  Rational value;
  friend bool operator==(const Quadrance &, const Quadrance &) = default;
};

/// Squared sine of the angle between two lines; in [0, 1].
struct Spread {
  Rational value;
  friend bool operator==(const Spread &, const Spread &) = default;
};

/// (A v B)^2 / (A^2 B^2). Invariant under rescaling either point; throws
/// IdealPoint if either weight is zero.
Quadrance quadrance(const Point &a, const Point &b);

/// -(l ^ m)^2 / (l^2 m^2). Throws NullLine if either line is null.
Spread spread(const Line &l, const Line &m);

/// (l . m)^2 / (l^2 m^2). Throws NullLine if either line is null.
Rational cross(const Line &l, const Line &m);

/// -(l ^ m)^2 / (l . m)^2, equal to spread / cross. Throws NullLine or
/// Perpendicular.
Rational twist(const Line &l, const Line &m);

/// (l ^ m)^2 = 0. Coincident lines count as parallel.
bool is_parallel(const Line &l, const Line &m);
bool is_perpendicular(const Line &l, const Line &m);

/// A v B v C = 0.
bool collinear(const Point &a, const Point &b, const Point &c);
/// l ^ m ^ n = 0. Parallel lines share an ideal point, so they count.
bool concurrent(const Line &l, const Line &m, const Line &n);

} // namespace pga
