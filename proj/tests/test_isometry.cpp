#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pga/constructions.hpp"
#include "pga/isometry.hpp"
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
Point image(const Versor &v, const Point &p) { return Point(apply(v, p.mv())); }

const Line e1 = ln(1, 0, 0);
const Line e2 = ln(0, 1, 0);

} // namespace

TEST_CASE("reflection") {
  const Versor r = reflection(e2);
  CHECK(r.parity() == Parity::Odd);
  CHECK(r.mv() == e2.mv());
  CHECK(reflection(e1).mv() == e1.mv());
  CHECK(kind_of([] { (void)reflection(ln(0, 0, 1)); }) == ErrorKind::NullLine);
}

TEST_CASE("reflection matches the coordinate mirror") {
  CHECK(projectively_equal(image(reflection(e2), pt(2, 3)), pt(2, -3)));
  const oracle::CoordPoint m = oracle::reflect_coords({0, 1, 0}, {2, 3});
  CHECK(normalize_point(image(reflection(e2), pt(2, 3))) == pt(m.x, m.y));
  const oracle::CoordPoint q =
      oracle::reflect_coords({3, -1, 2}, {Rational(1, 2), 4});
  CHECK(normalize_point(image(reflection(ln(3, -1, 2)), pt(Rational(1, 2), 4))) ==
        pt(q.x, q.y));
}

TEST_CASE("rotor") {
  const Versor r = rotor(e1, e2);
  CHECK(r.parity() == Parity::Even);
  // e2 e1 = -E0.
  CHECK(r.mv() == -Multivector::blade(Blade::E0));
  // Half-turn about the origin.
  CHECK(projectively_equal(image(r, pt(1, 0)), pt(-1, 0)));
  CHECK(normalize_point(image(r, pt(3, -2))) == pt(-3, 2));
  CHECK(kind_of([] { (void)rotor(e1, ln(0, 0, 4)); }) == ErrorKind::NullLine);
}

TEST_CASE("rotor of equal lines is the identity") {
  const Line l = ln(2, -3, 5);
  const Versor r = rotor(l, l);
  CHECK(r.mv() == Multivector::scalar(l.norm_squared()));
  const Multivector x = Multivector::parse("1 2 -3 1/2 4 0 -1 7");
  CHECK(projectively_equal(apply(r, x), x));
}

TEST_CASE("translation from mirrors x = 0 and x = 1") {
  const Versor t = rotor(e1, ln(1, 0, -1));
  CHECK(is_ideal_point(Point(rotor_point_part(t))));
  const Point moved = normalize_point(image(t, pt(0, 0)));
  CHECK(moved == pt(2, 0));
  // Mirrors one unit apart (Q = 1) move points by Q = 4.
  CHECK(quadrance(pt(0, 0), moved).value == Rational(4));
  CHECK(normalize_point(image(t, pt(-5, Rational(1, 3)))) == pt(-3, Rational(1, 3)));
}

TEST_CASE("fixed point of a rotor") {
  const Line l = ln(1, 2, -3), m = ln(-4, 1, 2);
  const Versor r = rotor(l, m);
  const Multivector centre = wedge(m.mv(), l.mv());
  CHECK(projectively_equal(apply(r, centre), centre));
  CHECK(projectively_equal(rotor_point_part(r), centre));
}

TEST_CASE("rotor parts") {
  CHECK(rotor_scalar_part(rotor(e1, e2)).is_zero());
  const Line l = ln(2, 7, -1);
  CHECK(rotor_point_part(rotor(l, l)).is_zero());
  // m l = (e1 - e2) e2 = E0 - 1.
  const Line m = ln(1, -1, 0);
  const Versor r = rotor(e2, m);
  const Rational s0 = rotor_scalar_part(r);
  CHECK(s0 == Rational(-1));
  CHECK(s0 * s0 / (e2.norm_squared() * m.norm_squared()) == Rational(1, 2));
  CHECK(s0 * s0 / (e2.norm_squared() * m.norm_squared()) == cross(e2, m));
  CHECK(kind_of([] { (void)rotor_scalar_part(reflection(e1)); }) == ErrorKind::Type);
  CHECK(kind_of([] { (void)rotor_point_part(reflection(e1)); }) == ErrorKind::Type);
}

TEST_CASE("scalar norm") {
  CHECK(reflection(ln(3, 4, 1)).scalar_norm() == Rational(25));
  CHECK(rotor(ln(3, 4, 1), ln(1, 1, 0)).scalar_norm() == Rational(50));
}

TEST_CASE("reflect equals the odd sandwich") {
  const Line m = ln(1, 2, 3);
  const Multivector x = Multivector::parse("0 1 1 1 1 1 1 0");
  CHECK(reflect(m, x) == m.mv() * x * m.mv());
  // Every grade maps to itself.
  for (int k = 0; k <= 3; ++k)
    CHECK(reflect(m, grade_part(x, Grade(k))).is_grade(k));
}

TEST_CASE("orientation") {
  const Point a = pt(0, 0), b = pt(4, 1), c = pt(-1, 3);
  const Rational before = signed_area2(a, b, c);
  const Versor r = reflection(ln(1, -2, 5));
  CHECK(signed_area2(image(r, a), image(r, b), image(r, c)) == -before);
  const Versor rot = rotor(ln(1, -2, 5), ln(3, 1, 0));
  CHECK(signed_area2(image(rot, a), image(rot, b), image(rot, c)) == before);
}

TEST_CASE("double angle") {
  const Line l = ln(1, 3, 0), m = ln(2, -1, 4);
  const Line mirrored(apply(reflection(m), l.mv()));
  CHECK(spread(l, mirrored).value ==
        Rational(4) * spread(l, m).value * cross(l, m));
}
