#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pga/geometry.hpp"

using namespace pga;

namespace {

Multivector b(Blade bl, Rational c = Rational{1}) {
  return Multivector::blade(bl, c);
}

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("expected pga::Error");
  return ErrorKind::InvalidArgument;
}

} // namespace

TEST_CASE("point_from_xy") {
  CHECK(point_from_xy(0, 0).mv() == b(Blade::E0));
  CHECK(point_from_xy(3, 4).mv() ==
        b(Blade::E0) + b(Blade::E1, Rational{3}) + b(Blade::E2, Rational{4}));
  CHECK(point_from_xy(Rational(-1, 2), Rational(2, 3)).mv() ==
        b(Blade::E0) + b(Blade::E1, Rational(-1, 2)) +
            b(Blade::E2, Rational(2, 3)));
}

TEST_CASE("line_from_abc") {
  CHECK(line_from_abc(1, 0, 0).mv() == b(Blade::e1));
  CHECK(line_from_abc(0, 1, 0).mv() == b(Blade::e2));
  CHECK(line_from_abc(1, 1, -1).mv() == -b(Blade::e0) + b(Blade::e1) + b(Blade::e2));
  CHECK(kind_of([] { (void)line_from_abc(0, 0, 0); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("wrappers reject other grades") {
  CHECK(kind_of([] { (void)Line(b(Blade::E0)); }) == ErrorKind::GradeMismatch);
  CHECK(kind_of([] { (void)Point(b(Blade::e1)); }) == ErrorKind::GradeMismatch);
  CHECK(kind_of([] { (void)Point(Multivector{}); }) == ErrorKind::GradeMismatch);
  CHECK(kind_of([] { (void)Point(b(Blade::E0) + b(Blade::S)); }) ==
        ErrorKind::GradeMismatch);
}

TEST_CASE("normalize_point") {
  CHECK(normalize_point(point_from_xyz(4, 6, 2)) == point_from_xy(2, 3));
  CHECK(normalize_point(point_from_xy(0, 0)) == point_from_xy(0, 0));
  CHECK(kind_of([] { (void)normalize_point(point_from_xyz(1, 1, 0)); }) ==
        ErrorKind::IdealPoint);
}

TEST_CASE("null lines and ideal points") {
  CHECK(is_null_line(line_from_abc(0, 0, 1)));
  CHECK_FALSE(is_null_line(line_from_abc(1, 0, 0)));
  CHECK(is_null_line(line_from_abc(0, 0, 5)));
  CHECK(is_ideal_point(Point(b(Blade::E1))));
  CHECK_FALSE(is_ideal_point(point_from_xy(1, 0)));
  const Point diff(point_from_xy(3, 1).mv() - point_from_xy(1, 2).mv());
  CHECK(is_ideal_point(diff));
}

TEST_CASE("incident") {
  CHECK(incident(point_from_xy(0, 0), line_from_abc(1, 0, 0)));
  CHECK_FALSE(incident(point_from_xy(1, 1), line_from_abc(1, 1, -1)));
  CHECK(incident(point_from_xy(Rational(1, 2), Rational(1, 2)),
                 line_from_abc(1, 1, -1)));
  // Ideal points lie on the ideal line.
  CHECK(incident(Point(b(Blade::E1) + b(Blade::E2)), line_from_abc(0, 0, 1)));
}

TEST_CASE("incident agrees with a x + b y + c z on random input") {
  std::mt19937_64 g(5);
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  int hits = 0;
  for (int i = 0; i < 2000; ++i) {
    const Rational x = d(g), y = d(g), z = d(g), a = d(g), bb = d(g), c = d(g);
    if ((x.is_zero() && y.is_zero() && z.is_zero()) ||
        (a.is_zero() && bb.is_zero() && c.is_zero()))
      continue;
    const bool expected = (a * x + bb * y + c * z).is_zero();
    hits += expected;
    REQUIRE(incident(point_from_xyz(x, y, z), line_from_abc(a, bb, c)) ==
            expected);
  }
  CHECK(hits > 50);
}

TEST_CASE("normalization is idempotent") {
  std::mt19937_64 g(9);
  std::uniform_int_distribution<std::int64_t> n(-50, 50), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    const Point p = point_from_xy(Rational(n(g), den(g)), Rational(n(g), den(g)));
    const Point once = normalize_point(p);
    REQUIRE(normalize_point(once) == once);
    REQUIRE(once == p);
  }
}
