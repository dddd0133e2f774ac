#pragma once

// Coordinate formulas used as independent references in tests. Nothing here
// may include the multivector kernel.

#include "pga/rational.hpp"

namespace pga::oracle {

struct CoordPoint {
  Rational x, y;
  friend bool operator==(const CoordPoint &, const CoordPoint &) = default;
};

/// a*x + b*y + c = 0.
struct CoordLine {
  Rational a, b, c;
  friend bool operator==(const CoordLine &, const CoordLine &) = default;
};

Rational quadrance_coords(const CoordPoint &p, const CoordPoint &q);

/// (a1 b2 - a2 b1)^2 / ((a1^2 + b1^2)(a2^2 + b2^2)). Throws NullLine.
Rational spread_coords(const CoordLine &l, const CoordLine &m);

/// (a1 a2 + b1 b2)^2 / ((a1^2 + b1^2)(a2^2 + b2^2)). Throws NullLine.
Rational cross_coords(const CoordLine &l, const CoordLine &m);

/// det of the rows (1, x, y).
Rational area2_det(const CoordPoint &a, const CoordPoint &b,
                   const CoordPoint &c);

/// P - 2 (a x + b y + c) / (a^2 + b^2) * (a, b). Throws NullLine.
CoordPoint reflect_coords(const CoordLine &m, const CoordPoint &p);

/// Line through two distinct points, from the 2x2 cofactors.
CoordLine line_through(const CoordPoint &p, const CoordPoint &q);

/// a x + b y + c.
Rational evaluate(const CoordLine &l, const CoordPoint &p);

/// Cramer's rule; throws Coincident for parallel lines.
CoordPoint intersect(const CoordLine &l, const CoordLine &m);

/// Orthogonal projection of p onto m. Throws NullLine.
CoordPoint project(const CoordLine &m, const CoordPoint &p);

} // namespace pga::oracle
