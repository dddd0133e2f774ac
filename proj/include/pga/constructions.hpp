#pragma once

#include <array>

#include "pga/rational_trig.hpp"

namespace pga {

/// A v B. Throws Coincident when the points are projectively equal.
Line join_points(const Point &a, const Point &b);

/// l ^ m, possibly an ideal point. Throws Coincident for equal lines.
Point meet_lines(const Line &l, const Line &m);

/// A . l: the line through A perpendicular to l.
Line altitude(const Point &a, const Line &l);

/// <A (A . l)>_1: the line through A parallel to l.
Line parallel_through(const Point &a, const Line &l);

/// l ^ (A . l): the orthogonal projection of A onto l.
Point foot(const Point &a, const Line &l);

/// Sum of the weight-normalized points. The result has weight 2.
Point midpoint(const Point &a, const Point &b);

/// (A v B) . (A + B) on normalized points.
Line perpendicular_bisector(const Point &a, const Point &b);

/// A v B v C on normalized points: twice the signed area, positive for
/// counterclockwise order.
Rational signed_area2(const Point &a, const Point &b, const Point &c);

/// Vertices are normalized to weight 1 on construction. Indices are 1-based
/// and sides/medians use the cyclic order (i, j, k) of (1, 2, 3).
class Triangle {
public:
  /// Throws Degenerate when the vertices are collinear.
  Triangle(const Point &a1, const Point &a2, const Point &a3);

  /// Accepts collinear or repeated vertices. Area, sides and medians stay
  /// defined where their result is nonzero; centroid throws.
  static Triangle allow_degenerate(const Point &a1, const Point &a2,
                                   const Point &a3);

  const Point &vertex(int i) const;
  bool degenerate() const { return degenerate_; }

  /// Twice the signed area.
  Rational area2() const;

private:
  struct Unchecked {};
  Triangle(Unchecked, const Point &a1, const Point &a2, const Point &a3);

  std::array<Point, 3> v_;
  bool degenerate_ = false;
};

/// a_i = A_j v A_k.
Line side(const Triangle &t, int i);

/// m_i = (A_j + A_k) v A_i.
Line median(const Triangle &t, int i);

/// normalize(A1 + A2 + A3). Throws Degenerate for a degenerate triangle.
Point centroid(const Triangle &t);

} // namespace pga
