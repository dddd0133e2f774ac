#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pga/multivector.hpp"

using namespace pga;

namespace {

Multivector b(Blade bl, Rational c = Rational{1}) {
  return Multivector::blade(bl, c);
}

Multivector scalar(std::int64_t n) { return Multivector::scalar(Rational{n}); }

struct Gen {
  std::mt19937_64 g{2024};
  Rational r() {
    std::uniform_int_distribution<std::int64_t> den(1, 10), num(-100, 100);
    return {num(g), den(g)};
  }
  Multivector mv() {
    std::array<Rational, kBladeCount> c;
    for (auto &x : c)
      x = r();
    return Multivector(c);
  }
  Multivector vec() { return b(Blade::e0, r()) + b(Blade::e1, r()) + b(Blade::e2, r()); }
};

} // namespace

TEST_CASE("signature") {
  CHECK(b(Blade::e1) * b(Blade::e1) == scalar(1));
  CHECK(b(Blade::e2) * b(Blade::e2) == scalar(1));
  CHECK(b(Blade::E0) * b(Blade::E0) == scalar(-1));
  CHECK(b(Blade::e0) * b(Blade::e0) == scalar(0));
  CHECK(square(b(Blade::E1)).is_zero());
  CHECK(square(b(Blade::E2)).is_zero());
  CHECK(square(b(Blade::I)).is_zero());
}

TEST_CASE("bivector basis is the cyclic products") {
  CHECK(b(Blade::e1) * b(Blade::e2) == b(Blade::E0));
  CHECK(b(Blade::e2) * b(Blade::e0) == b(Blade::E1));
  CHECK(b(Blade::e0) * b(Blade::e1) == b(Blade::E2));
  CHECK(b(Blade::e1) * b(Blade::e0) == -b(Blade::E2));
  CHECK(b(Blade::e0) * b(Blade::E0) == b(Blade::I));
  CHECK(b(Blade::E0) * b(Blade::e0) == b(Blade::I));
  CHECK(b(Blade::e0) * b(Blade::e1) * b(Blade::e2) == b(Blade::I));
}

TEST_CASE("table entries are compile-time data") {
  constexpr BladeProduct p = kGeometricTable[index(Blade::e2)][index(Blade::e1)];
  static_assert(p.sign == -1 && p.result == Blade::E0);
  constexpr BladeProduct w = kWedgeTable[index(Blade::e1)][index(Blade::e1)];
  static_assert(w.sign == 0);
  CHECK(p.sign == -1);
}

TEST_CASE("wedge") {
  CHECK(wedge(b(Blade::e1), b(Blade::e2)) == b(Blade::E0));
  Gen g;
  for (int i = 0; i < 50; ++i) {
    const Multivector l = g.vec();
    REQUIRE(wedge(l, l).is_zero());
  }
  // By hand: e0^e1 = E2 and -e2^e1 = e1e2 = E0; the point (0, 1).
  const Multivector l = b(Blade::e0) - b(Blade::e1) - b(Blade::e2);
  CHECK(wedge(l, b(Blade::e1)) == b(Blade::E0) + b(Blade::E2));
  CHECK(wedge(scalar(3), b(Blade::E1)) == b(Blade::E1, Rational{3}));
}

TEST_CASE("join") {
  const Multivector o = b(Blade::E0);
  const Multivector x1 = b(Blade::E0) + b(Blade::E1);
  const Multivector y1 = b(Blade::E0) + b(Blade::E2);
  // y = 0 through (0,0) and (1,0): J(e0 ^ (e0 + e1)) = J(E2) = e2.
  CHECK(join(o, x1) == b(Blade::e2));
  CHECK(join(x1, x1).is_zero());
  // det [[1,0,0],[1,1,0],[1,0,1]] = 1.
  CHECK(join(join(o, x1), y1) == scalar(1));
}

TEST_CASE("dual") {
  CHECK(dual(b(Blade::e0)) == b(Blade::E0));
  CHECK(dual(scalar(1)) == b(Blade::I));
  CHECK(dual(b(Blade::E2, Rational{5})) == b(Blade::e2, Rational{5}));
  Gen g;
  for (int i = 0; i < 50; ++i) {
    const Multivector x = g.mv();
    REQUIRE(dual(dual(x)) == x);
  }
}

TEST_CASE("grade projection") {
  const Multivector x = scalar(3) + b(Blade::e1, Rational{2}) + b(Blade::E0);
  CHECK(grade_part(x, Grade(1)) == b(Blade::e1, Rational{2}));
  CHECK(grade_part(b(Blade::e1) * b(Blade::e2), Grade(0)).is_zero());
  Gen g;
  const Multivector y = g.mv();
  CHECK(grade_part(y, Grade(0)) + grade_part(y, Grade(1)) +
            grade_part(y, Grade(2)) + grade_part(y, Grade(3)) ==
        y);
  CHECK_THROWS_AS(Grade(4), Error);
  CHECK_THROWS_AS(Grade(-1), Error);
}

TEST_CASE("dot") {
  CHECK(dot(b(Blade::e1), b(Blade::e2)).is_zero());
  CHECK(dot(b(Blade::e1) + b(Blade::e2), b(Blade::e1)) == scalar(1));
  // Point . line = b e1 - a e2 + (y a - x b) e0, expanded by hand.
  Gen g;
  for (int i = 0; i < 100; ++i) {
    const Rational x = g.r(), y = g.r(), a = g.r(), bb = g.r(), c = g.r();
    const Multivector p = b(Blade::E0) + b(Blade::E1, x) + b(Blade::E2, y);
    const Multivector l = b(Blade::e0, c) + b(Blade::e1, a) + b(Blade::e2, bb);
    const Multivector expected =
        b(Blade::e1, bb) - b(Blade::e2, a) + b(Blade::e0, y * a - x * bb);
    REQUIRE(dot(p, l) == expected);
  }
  // Perpendicular lines: the dot is zero even though the product is not.
  CHECK(dot(b(Blade::e1), b(Blade::e2)).is_zero());
  CHECK_FALSE((b(Blade::e1) * b(Blade::e2)).is_zero());
}

TEST_CASE("reverse") {
  CHECK(reverse(b(Blade::e1) * b(Blade::e2)) == -b(Blade::E0));
  CHECK(reverse(b(Blade::e1) * b(Blade::e2)) == b(Blade::e2) * b(Blade::e1));
  CHECK(reverse(b(Blade::I)) == -b(Blade::I));
  Gen g;
  for (int i = 0; i < 100; ++i) {
    const Multivector x = g.mv(), y = g.mv();
    REQUIRE(reverse(reverse(x)) == x);
    REQUIRE(reverse(x * y) == reverse(y) * reverse(x));
  }
}

TEST_CASE("linear structure") {
  Gen g;
  const Multivector x = g.mv();
  CHECK(x + Multivector{} == x);
  CHECK(scale(Rational{2}, b(Blade::e1)) == b(Blade::e1, Rational{2}));
  CHECK(scale(Rational{0}, x).is_zero());
  CHECK(add(x, -x).is_zero());
}

TEST_CASE("square") {
  CHECK(square(b(Blade::e1, Rational{3}) + b(Blade::e2, Rational{4})) ==
        scalar(25));
  // Only E0^2 = -1 contributes.
  CHECK(square(b(Blade::E0, Rational{2}) + b(Blade::E1, Rational{5}) -
               b(Blade::E2)) == scalar(-4));
  CHECK(square(b(Blade::I)).is_zero());
}

TEST_CASE("projective equality") {
  CHECK(projectively_equal(b(Blade::E0) + b(Blade::E1),
                           b(Blade::E0, Rational{3}) + b(Blade::E1, Rational{3})));
  CHECK(projectively_equal(b(Blade::E0), -b(Blade::E0)));
  CHECK_FALSE(projectively_equal(b(Blade::e1), b(Blade::e2)));
  CHECK(projectively_equal(Multivector{}, Multivector{}));
  CHECK_FALSE(projectively_equal(Multivector{}, b(Blade::e1)));
  CHECK_FALSE(projectively_equal(b(Blade::e1), Multivector{}));
  CHECK_FALSE(projectively_equal(b(Blade::e1) + b(Blade::e2),
                                 b(Blade::e1) - b(Blade::e2)));
}

TEST_CASE("associativity and the vector split") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    const Multivector x = g.mv(), y = g.mv(), z = g.mv();
    REQUIRE((x * y) * z == x * (y * z));
    const Multivector l = g.vec(), m = g.vec();
    REQUIRE(l * m == dot(l, m) + wedge(l, m));
    REQUIRE(wedge(l, m) == -wedge(m, l));
  }
}

TEST_CASE("text form") {
  const Multivector m = Multivector::parse("0 1/2 -3 0 0 0 0 7");
  CHECK(m[Blade::e0] == Rational(1, 2));
  CHECK(m[Blade::I] == Rational(7));
  CHECK(m.str() == "0 1/2 -3 0 0 0 0 7");
  CHECK(Multivector::parse(m.str()) == m);
  CHECK_THROWS_AS(Multivector::parse("1 2 3"), Error);
  CHECK_THROWS_AS(Multivector::parse("1 2 3 4 5 6 7 8 9"), Error);
  CHECK_THROWS_AS(Multivector::parse("1 2 3 4 5 6 7 x"), Error);
}
