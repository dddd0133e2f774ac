#include "pga/constructions.hpp"

#include <string>

namespace pga {

namespace {

void require_non_null(const Line &l, const char *what) {
  if (is_null_line(l))
    throw Error(ErrorKind::NullLine,
                std::string(what) + " needs a non-null line, got [" +
                    l.mv().str() + "]");
}

void require_proper(const Point &p, const char *what) {
  if (is_ideal_point(p))
    throw Error(ErrorKind::IdealPoint,
                std::string(what) + " needs a proper point, got [" +
                    p.mv().str() + "]");
}

int checked_index(int i) {
  if (i < 1 || i > 3)
    throw Error(ErrorKind::InvalidArgument,
                "triangle index " + std::to_string(i) + " outside 1..3");
  return i;
}

// Cyclic successor in (1, 2, 3).
int next(int i) { return i % 3 + 1; }

} // namespace

Line join_points(const Point &a, const Point &b) {
  Multivector l = join(a.mv(), b.mv());
  if (l.is_zero())
    throw Error(ErrorKind::Coincident, "join of coincident points");
  return Line(std::move(l));
}

Point meet_lines(const Line &l, const Line &m) {
  Multivector p = wedge(l.mv(), m.mv());
  if (p.is_zero())
    throw Error(ErrorKind::Coincident, "meet of coincident lines");
  return Point(std::move(p));
}

Line altitude(const Point &a, const Line &l) {
  require_non_null(l, "altitude");
  require_proper(a, "altitude");
  return Line(grade_part(dot(a.mv(), l.mv()), Grade(1)));
}

Line parallel_through(const Point &a, const Line &l) {
  require_non_null(l, "parallel-through");
  require_proper(a, "parallel-through");
  const Line perp = altitude(a, l);
  return Line(grade_part(geometric_product(a.mv(), perp.mv()), Grade(1)));
}

Point foot(const Point &a, const Line &l) {
  require_non_null(l, "foot");
  require_proper(a, "foot");
  return Point(wedge(l.mv(), altitude(a, l).mv()));
}

Point midpoint(const Point &a, const Point &b) {
  require_proper(a, "midpoint");
  require_proper(b, "midpoint");
  return Point(normalize_point(a).mv() + normalize_point(b).mv());
}

Line perpendicular_bisector(const Point &a, const Point &b) {
  require_proper(a, "perpendicular bisector");
  require_proper(b, "perpendicular bisector");
  const Point na = normalize_point(a);
  const Point nb = normalize_point(b);
  if (na == nb)
    throw Error(ErrorKind::Coincident,
                "perpendicular bisector of coincident points");
  const Multivector joining = join(na.mv(), nb.mv());
  return Line(grade_part(dot(joining, na.mv() + nb.mv()), Grade(1)));
}

Rational signed_area2(const Point &a, const Point &b, const Point &c) {
  require_proper(a, "signed area");
  require_proper(b, "signed area");
  require_proper(c, "signed area");
  const Multivector s =
      join(join(normalize_point(a).mv(), normalize_point(b).mv()),
           normalize_point(c).mv());
  return s[Blade::S];
}

Triangle::Triangle(Unchecked, const Point &a1, const Point &a2,
                   const Point &a3)
    : v_{normalize_point(a1), normalize_point(a2), normalize_point(a3)} {
  degenerate_ = signed_area2(v_[0], v_[1], v_[2]).is_zero();
}

Triangle::Triangle(const Point &a1, const Point &a2, const Point &a3)
    : Triangle(Unchecked{}, a1, a2, a3) {
  if (degenerate_)
    throw Error(ErrorKind::Degenerate, "triangle vertices are collinear");
}

Triangle Triangle::allow_degenerate(const Point &a1, const Point &a2,
                                    const Point &a3) {
  return Triangle(Unchecked{}, a1, a2, a3);
}

const Point &Triangle::vertex(int i) const { return v_[checked_index(i) - 1]; }

Rational Triangle::area2() const {
  return signed_area2(v_[0], v_[1], v_[2]);
}

Line side(const Triangle &t, int i) {
  const int j = next(checked_index(i));
  const int k = next(j);
  Multivector l = join(t.vertex(j).mv(), t.vertex(k).mv());
  if (l.is_zero())
    throw Error(ErrorKind::Degenerate,
                "side a" + std::to_string(i) + " joins coincident vertices");
  return Line(std::move(l));
}

Line median(const Triangle &t, int i) {
  const int j = next(checked_index(i));
  const int k = next(j);
  Multivector m =
      join(t.vertex(j).mv() + t.vertex(k).mv(), t.vertex(i).mv());
  if (m.is_zero())
    throw Error(ErrorKind::Degenerate,
                "median m" + std::to_string(i) + " is undefined");
  return Line(std::move(m));
}

Point centroid(const Triangle &t) {
  if (t.degenerate())
    throw Error(ErrorKind::Degenerate, "centroid of a degenerate triangle");
  return normalize_point(
      Point(t.vertex(1).mv() + t.vertex(2).mv() + t.vertex(3).mv()));
}

} // namespace pga
