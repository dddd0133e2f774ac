#include "pga/oracle.hpp"

namespace pga::oracle {

namespace {

Rational norm2(const CoordLine &l) { return l.a * l.a + l.b * l.b; }

void require_non_null(const CoordLine &l) {
  if (norm2(l).is_zero())
    throw Error(ErrorKind::NullLine, "coordinate line with a = b = 0");
}

} // namespace

Rational quadrance_coords(const CoordPoint &p, const CoordPoint &q) {
  const Rational dx = p.x - q.x;
  const Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

Rational spread_coords(const CoordLine &l, const CoordLine &m) {
  require_non_null(l);
  require_non_null(m);
  const Rational d = l.a * m.b - m.a * l.b;
  return d * d / (norm2(l) * norm2(m));
}

Rational cross_coords(const CoordLine &l, const CoordLine &m) {
  require_non_null(l);
  require_non_null(m);
  const Rational d = l.a * m.a + l.b * m.b;
  return d * d / (norm2(l) * norm2(m));
}

Rational area2_det(const CoordPoint &a, const CoordPoint &b,
                   const CoordPoint &c) {
  // | 1 ax ay |
  // | 1 bx by |
  // | 1 cx cy |
  return (b.x * c.y - c.x * b.y) - (a.x * c.y - c.x * a.y) +
         (a.x * b.y - b.x * a.y);
}

CoordPoint reflect_coords(const CoordLine &m, const CoordPoint &p) {
  require_non_null(m);
  const Rational k = Rational{2} * evaluate(m, p) / norm2(m);
  return {p.x - k * m.a, p.y - k * m.b};
}

CoordLine line_through(const CoordPoint &p, const CoordPoint &q) {
  if (p == q)
    throw Error(ErrorKind::Coincident, "line through coincident points");
  return {p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y};
}

Rational evaluate(const CoordLine &l, const CoordPoint &p) {
  return l.a * p.x + l.b * p.y + l.c;
}

CoordPoint intersect(const CoordLine &l, const CoordLine &m) {
  const Rational det = l.a * m.b - m.a * l.b;
  if (det.is_zero())
    throw Error(ErrorKind::Coincident, "parallel coordinate lines");
  return {(l.b * m.c - m.b * l.c) / det, (m.a * l.c - l.a * m.c) / det};
}

CoordPoint project(const CoordLine &m, const CoordPoint &p) {
  require_non_null(m);
  const Rational k = evaluate(m, p) / norm2(m);
  return {p.x - k * m.a, p.y - k * m.b};
}

} // namespace pga::oracle
