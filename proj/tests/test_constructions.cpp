#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pga/constructions.hpp"
#include "pga/oracle.hpp"

using namespace pga;

namespace {

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("expected pga::Error");
  return ErrorKind::InvalidArgument;
}

Point pt(Rational x, Rational y) { return point_from_xy(x, y); }
Line ln(Rational a, Rational b, Rational c) { return line_from_abc(a, b, c); }
Point at(const oracle::CoordPoint &p) { return pt(p.x, p.y); }

const Triangle unit_right{pt(0, 0), pt(1, 0), pt(0, 1)};

} // namespace

TEST_CASE("join_points") {
  CHECK(projectively_equal(join_points(pt(0, 0), pt(1, 0)), ln(0, 1, 0)));
  CHECK(projectively_equal(join_points(pt(0, 0), pt(1, 1)), ln(1, -1, 0)));
  const Line l = join_points(pt(1, 2), pt(3, 4));
  CHECK(incident(pt(1, 2), l));
  CHECK(incident(pt(3, 4), l));
  CHECK(kind_of([] { (void)join_points(pt(1, 1), point_from_xyz(3, 3, 3)); }) ==
        ErrorKind::Coincident);
}

TEST_CASE("meet_lines") {
  CHECK(meet_lines(ln(1, 0, 0), ln(0, 1, 0)) == pt(0, 0));
  CHECK(is_ideal_point(meet_lines(ln(1, 0, 0), ln(1, 0, -1))));
  // x + y = 1, x - y = 0 solved by Cramer's rule.
  const oracle::CoordPoint solved = oracle::intersect({1, 1, -1}, {1, -1, 0});
  CHECK(solved == oracle::CoordPoint{Rational(1, 2), Rational(1, 2)});
  CHECK(normalize_point(meet_lines(ln(1, 1, -1), ln(1, -1, 0))) == at(solved));
  CHECK(kind_of([] { (void)meet_lines(ln(1, 2, 3), ln(2, 4, 6)); }) ==
        ErrorKind::Coincident);
}

TEST_CASE("altitude") {
  // b e1 - a e2 + (y a - x b) e0 with a = b = 1 at the origin: x - y = 0.
  CHECK(altitude(pt(0, 0), ln(1, 1, -1)).mv() == ln(1, -1, 0).mv());
  const Line l = ln(2, -1, 3);
  const Point on = pt(1, 5);
  REQUIRE(incident(on, l));
  const Line h = altitude(on, l);
  CHECK(incident(on, h));
  CHECK(is_perpendicular(h, l));
  CHECK(projectively_equal(altitude(pt(0, 0), ln(0, 1, 0)), ln(1, 0, 0)));
  CHECK(kind_of([] { (void)altitude(pt(0, 0), ln(0, 0, 1)); }) ==
        ErrorKind::NullLine);
}

TEST_CASE("parallel_through") {
  const Line p = parallel_through(pt(0, 1), ln(0, 1, 0));
  CHECK(projectively_equal(p, ln(0, 1, -1)));
  CHECK(incident(pt(0, 1), p));
  CHECK(is_parallel(p, ln(0, 1, 0)));

  const Line l = ln(1, 1, -1);
  CHECK(projectively_equal(parallel_through(pt(1, 0), l), l));

  const Line q = parallel_through(pt(2, 3), l);
  CHECK(incident(pt(2, 3), q));
  CHECK(spread(q, l).value.is_zero());
  CHECK(kind_of([] { (void)parallel_through(pt(0, 0), ln(0, 0, 3)); }) ==
        ErrorKind::NullLine);
}

TEST_CASE("foot") {
  CHECK(normalize_point(foot(pt(1, 1), ln(0, 1, 0))) ==
        at(oracle::project({0, 1, 0}, {1, 1})));
  CHECK(normalize_point(foot(pt(1, 1), ln(0, 1, 0))) == pt(1, 0));
  CHECK(projectively_equal(foot(pt(1, 0), ln(1, 1, -1)), pt(1, 0)));
  CHECK(normalize_point(foot(pt(0, 0), ln(1, 0, -3))) == pt(3, 0));
  CHECK(normalize_point(foot(pt(0, 0), ln(1, 0, -3))) ==
        at(oracle::project({1, 0, -3}, {0, 0})));
  CHECK(kind_of([] { (void)foot(pt(0, 0), ln(0, 0, 1)); }) ==
        ErrorKind::NullLine);
}

TEST_CASE("midpoint") {
  CHECK(normalize_point(midpoint(pt(0, 0), pt(2, 0))) == pt(1, 0));
  CHECK(midpoint(pt(0, 0), pt(2, 0)).weight() == Rational(2));
  CHECK(normalize_point(midpoint(pt(1, 1), pt(1, 1))) == pt(1, 1));
  CHECK(normalize_point(midpoint(pt(0, 0), point_from_xyz(3, 3, 3))) ==
        pt(Rational(1, 2), Rational(1, 2)));
  CHECK(kind_of([] { (void)midpoint(pt(0, 0), point_from_xyz(1, 0, 0)); }) ==
        ErrorKind::IdealPoint);
}

TEST_CASE("perpendicular_bisector") {
  CHECK(projectively_equal(perpendicular_bisector(pt(0, 0), pt(2, 0)),
                           ln(1, 0, -1)));
  CHECK(projectively_equal(perpendicular_bisector(pt(0, 0), pt(0, 2)),
                           ln(0, 1, -1)));
  CHECK(projectively_equal(perpendicular_bisector(pt(0, 0), pt(2, 2)),
                           ln(1, 1, -2)));
  // Scaled inputs give the same line.
  CHECK(projectively_equal(
      perpendicular_bisector(point_from_xyz(0, 0, 5), point_from_xyz(-4, -4, -2)),
      ln(1, 1, -2)));
  const Line bis = perpendicular_bisector(pt(1, 3), pt(-2, 7));
  for (int k = -3; k <= 3; ++k) {
    const Point x = normalize_point(meet_lines(bis, ln(1, 0, k)));
    CHECK(quadrance(pt(1, 3), x) == quadrance(pt(-2, 7), x));
  }
  CHECK(kind_of([] { (void)perpendicular_bisector(pt(1, 1), pt(1, 1)); }) ==
        ErrorKind::Coincident);
}

TEST_CASE("signed_area2") {
  CHECK(signed_area2(pt(0, 0), pt(1, 0), pt(0, 1)) == Rational(1));
  CHECK(signed_area2(pt(0, 0), pt(0, 1), pt(1, 0)) == Rational(-1));
  CHECK(signed_area2(pt(0, 0), pt(1, 1), pt(2, 2)).is_zero());
  CHECK(signed_area2(point_from_xyz(0, 0, 3), point_from_xyz(-2, 0, -2),
                     pt(0, 1)) == oracle::area2_det({0, 0}, {1, 0}, {0, 1}));
  CHECK(kind_of([] {
          (void)signed_area2(pt(0, 0), pt(1, 0), point_from_xyz(0, 1, 0));
        }) == ErrorKind::IdealPoint);
}

TEST_CASE("sides of the unit right triangle") {
  CHECK(projectively_equal(side(unit_right, 3), ln(0, 1, 0)));
  CHECK(projectively_equal(side(unit_right, 1), ln(1, 1, -1)));
  CHECK(projectively_equal(side(unit_right, 2), ln(1, 0, 0)));
  CHECK(kind_of([] { (void)side(unit_right, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)side(unit_right, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("medians") {
  const Line m1 = median(unit_right, 1);
  CHECK(projectively_equal(m1, join_points(pt(0, 0), pt(Rational(1, 2), Rational(1, 2)))));
  CHECK(projectively_equal(m1, ln(1, -1, 0)));
  const Line m2 = median(unit_right, 2);
  CHECK(incident(pt(1, 0), m2));
  CHECK(incident(pt(0, Rational(1, 2)), m2));
  for (int i = 1; i <= 3; ++i)
    CHECK(incident(unit_right.vertex(i), median(unit_right, i)));
}

TEST_CASE("centroid") {
  CHECK(centroid(unit_right) == pt(Rational(1, 3), Rational(1, 3)));
  CHECK(centroid(Triangle(pt(0, 0), pt(3, 0), pt(0, 3))) == pt(1, 1));
  CHECK(centroid(Triangle(pt(0, 0), pt(2, 0), pt(1, 1))) == pt(1, Rational(1, 3)));
  // Weighted input is normalized on construction.
  CHECK(centroid(Triangle(point_from_xyz(0, 0, 7), point_from_xyz(-3, 0, -1),
                          point_from_xyz(0, 6, 2))) == pt(1, 1));
}

TEST_CASE("degenerate triangles") {
  CHECK(kind_of([] { (void)Triangle(pt(0, 0), pt(1, 1), pt(2, 2)); }) ==
        ErrorKind::Degenerate);
  const Triangle flat = Triangle::allow_degenerate(pt(0, 0), pt(1, 1), pt(2, 2));
  CHECK(flat.degenerate());
  CHECK(flat.area2().is_zero());
  CHECK(projectively_equal(side(flat, 3), ln(1, -1, 0)));
  CHECK(kind_of([&] { (void)centroid(flat); }) == ErrorKind::Degenerate);
  // Every median of a flat triangle is the carrier line itself.
  CHECK(projectively_equal(median(flat, 1), ln(1, -1, 0)));

  const Triangle pinched = Triangle::allow_degenerate(pt(0, 0), pt(0, 0), pt(1, 0));
  CHECK(kind_of([&] { (void)side(pinched, 3); }) == ErrorKind::Degenerate);
}

TEST_CASE("a_i ^ a_j = 2 area A_k on the unit right triangle") {
  // a1 = x + y - 1 = 0, a2 = x = 0 meet at A3 = (0, 1) with 2 area = 1.
  CHECK(wedge(side(unit_right, 1).mv(), side(unit_right, 2).mv()) ==
        unit_right.vertex(3).mv());
  CHECK(wedge(wedge(side(unit_right, 1).mv(), side(unit_right, 2).mv()),
              side(unit_right, 3).mv()) == Multivector::blade(Blade::I));
}
