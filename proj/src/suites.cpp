#include "pga/suites.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "pga/constructions.hpp"
#include "pga/isometry.hpp"

namespace pga::verify {

namespace {

using oracle::CoordLine;
using oracle::CoordPoint;

// Scalar value of a multivector that must be a pure scalar.
Rational scalar_of(const Multivector &m, const std::string &what) {
  require(m.is_grade(0), what + " is not a scalar: [" + m.str() + "]");
  return m[Blade::S];
}

std::string show(const Rational &r) { return r.str(); }

CoordPoint coords(const Point &p) {
  const Point n = normalize_point(p);
  return {n.x(), n.y()};
}

Point scaled(const Rational &w, const Point &p) {
  return Point(scale(w, p.mv()));
}

Line scaled(const Rational &w, const Line &l) {
  return Line(scale(w, l.mv()));
}

// ---------------------------------------------------------------------------
// Blade products by word rewriting: an independent route to the table.

std::vector<int> generator_word(Blade b) {
  switch (b) {
  case Blade::S: return {};
  case Blade::e0: return {0};
  case Blade::e1: return {1};
  case Blade::e2: return {2};
  case Blade::E0: return {1, 2};
  case Blade::E1: return {2, 0};
  case Blade::E2: return {0, 1};
  case Blade::I: return {0, 1, 2};
  }
  return {};
}

Multivector word_product(Blade a, Blade b, bool outer_only) {
  std::vector<int> w = generator_word(a);
  const std::vector<int> wb = generator_word(b);
  if (outer_only)
    for (int g : wb)
      if (std::find(w.begin(), w.end(), g) != w.end())
        return {};
  w.insert(w.end(), wb.begin(), wb.end());

  constexpr std::array<int, 3> square_of{0, 1, 1};
  int sign = 1;
  bool changed = true;
  while (changed && sign != 0) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
        changed = true;
      } else if (w[i] == w[i + 1]) {
        sign *= square_of[static_cast<std::size_t>(w[i])];
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  if (sign == 0)
    return {};

  // Sorted words against the basis blades; e2e0 = -e0e2.
  struct Entry {
    std::vector<int> word;
    Blade blade;
    int orientation;
  };
  const std::array<Entry, kBladeCount> sorted{{{{}, Blade::S, 1},
                                               {{0}, Blade::e0, 1},
                                               {{1}, Blade::e1, 1},
                                               {{2}, Blade::e2, 1},
                                               {{1, 2}, Blade::E0, 1},
                                               {{0, 2}, Blade::E1, -1},
                                               {{0, 1}, Blade::E2, 1},
                                               {{0, 1, 2}, Blade::I, 1}}};
  for (const auto &e : sorted)
    if (e.word == w)
      return Multivector::blade(e.blade, Rational{sign * e.orientation});
  throw CheckFailure("word reduction produced an unknown blade");
}

void blade_table_case(std::size_t index, CaseRng &) {
  const auto a = static_cast<Blade>(index / kBladeCount);
  const auto b = static_cast<Blade>(index % kBladeCount);
  const std::string label =
      std::string(blade_name(a)) + "*" + std::string(blade_name(b));
  const Multivector ba = Multivector::blade(a);
  const Multivector bb = Multivector::blade(b);

  require(geometric_product(ba, bb) == word_product(a, b, false),
          label + " disagrees with generator rewriting");
  require(wedge(ba, bb) == word_product(a, b, true),
          "wedge " + label + " disagrees with generator rewriting");

  if (a == b) {
    // e0^2 = 0, e1^2 = e2^2 = 1, E0^2 = -1, E1^2 = E2^2 = 0, I^2 = 0.
    constexpr std::array<int, kBladeCount> squares{1, 0, 1, 1, -1, 0, 0, 0};
    require(square(ba) == Multivector::scalar(Rational{squares[index / 8]}),
            label + " has the wrong signature square");
  }
}

// ---------------------------------------------------------------------------

void associativity_case(std::size_t, CaseRng &rng) {
  const Multivector x = rng.multivector();
  const Multivector y = rng.multivector();
  const Multivector z = rng.multivector();
  require(geometric_product(geometric_product(x, y), z) ==
              geometric_product(x, geometric_product(y, z)),
          "(XY)Z != X(YZ)");

  const Multivector l = rng.vector();
  const Multivector m = rng.vector();
  require(geometric_product(l, m) == dot(l, m) + wedge(l, m),
          "lm != l.m + l^m");
  require(wedge(l, m) == -wedge(m, l), "l^m != -(m^l)");
  require(dot(l, m).is_grade(0), "l.m is not a scalar");
}

void quadrance_case(std::size_t, CaseRng &rng) {
  const CoordPoint p = rng.coord_point();
  const CoordPoint q = rng.coord_point();
  const Rational expected = oracle::quadrance_coords(p, q);
  const Point a = rng.point(p);
  const Point b = rng.point(q);

  const Rational direct =
      scalar_of(square(join(a.mv(), b.mv())), "(A v B)^2");
  require(direct == expected, "(A v B)^2 = " + show(direct) + ", oracle " +
                                  show(expected));
  require(quadrance(a, b).value == expected, "quadrance on weight-1 points");

  const Point sa = scaled(rng.nonzero_rational(), a);
  const Point sb = scaled(rng.nonzero_rational(), b);
  const Rational q_scaled = quadrance(sa, sb).value;
  require(q_scaled == expected, "quadrance of rescaled points = " +
                                    show(q_scaled) + ", oracle " +
                                    show(expected));
}

void spread_case(std::size_t, CaseRng &rng) {
  const CoordLine cl = rng.coord_line();
  const CoordLine cm = rng.coord_line();
  const Rational expected = oracle::spread_coords(cl, cm);
  const Line l = rng.line(cl);
  const Line m = rng.line(cm);
  require(spread(l, m).value == expected, "spread disagrees with oracle");
  const Rational s_scaled = spread(scaled(rng.nonzero_rational(), l),
                                   scaled(rng.nonzero_rational(), m))
                                .value;
  require(s_scaled == expected, "spread of rescaled lines = " +
                                    show(s_scaled) + ", oracle " +
                                    show(expected));
  require(expected >= Rational{0} && expected <= Rational{1},
          "spread outside [0, 1]");
}

void spread_cross_case(std::size_t, CaseRng &rng) {
  const CoordLine cl = rng.coord_line();
  // Every fourth case forces a perpendicular pair so the twist error path
  // is exercised too.
  CoordLine cm = rng.coord_line();
  if (rng.integer(0, 3) == 0)
    cm = {-cl.b, cl.a, rng.rational()};
  const Line l = rng.line(cl);
  const Line m = rng.line(cm);
  const Rational s = spread(l, m).value;
  const Rational c = cross(l, m);
  require(s + c == Rational{1}, "spread + cross = " + show(s + c));
  require(c == oracle::cross_coords(cl, cm), "cross disagrees with oracle");
  if (c.is_zero()) {
    bool threw = false;
    try {
      (void)twist(l, m);
    } catch (const Error &e) {
      threw = e.kind() == ErrorKind::Perpendicular;
    }
    require(threw, "twist of perpendicular lines did not fail");
  } else {
    require(twist(l, m) == s / c, "twist != spread / cross");
  }
}

std::array<Point, 3> weighted_vertices(CaseRng &rng,
                                       const std::array<CoordPoint, 3> &t) {
  return {scaled(rng.nonzero_rational(), rng.point(t[0])),
          scaled(rng.nonzero_rational(), rng.point(t[1])),
          scaled(rng.nonzero_rational(), rng.point(t[2]))};
}

constexpr std::array<std::array<int, 3>, 3> kCyclic{
    {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};

void triangle_case(std::size_t, CaseRng &rng) {
  const auto t = rng.triangle();
  const auto v = weighted_vertices(rng, t);
  const Triangle tri(v[0], v[1], v[2]);
  const Rational area2 = tri.area2();
  const Rational det = oracle::area2_det(t[0], t[1], t[2]);
  require(area2 == det, "A1 v A2 v A3 = " + show(area2) + ", determinant " +
                            show(det));

  const Multivector triple =
      join(join(tri.vertex(1).mv(), tri.vertex(2).mv()), tri.vertex(3).mv());
  require(triple == Multivector::scalar(det), "triple join is not 2*area");

  for (const auto &[i, j, k] : kCyclic) {
    require(wedge(side(tri, i).mv(), side(tri, j).mv()) ==
                scale(area2, tri.vertex(k).mv()),
            "a" + std::to_string(i) + " ^ a" + std::to_string(j) +
                " != 2*area*A" + std::to_string(k));
    require(square(side(tri, i).mv()) ==
                Multivector::scalar(oracle::quadrance_coords(
                    coords(tri.vertex(j)), coords(tri.vertex(k)))),
            "a" + std::to_string(i) + "^2 is not the side quadrance");
  }
  const Multivector a123 =
      wedge(wedge(side(tri, 1).mv(), side(tri, 2).mv()), side(tri, 3).mv());
  require(a123 == Multivector::blade(Blade::I, area2 * area2),
          "a1 ^ a2 ^ a3 != 4*area^2*I");
}

void median_case(std::size_t, CaseRng &rng) {
  const auto t = rng.triangle();
  const auto v = weighted_vertices(rng, t);
  const Triangle tri(v[0], v[1], v[2]);
  const Rational area2 = tri.area2();
  const Multivector vertex_sum =
      tri.vertex(1).mv() + tri.vertex(2).mv() + tri.vertex(3).mv();

  for (const auto &[i, j, k] : kCyclic) {
    const Multivector mij = wedge(median(tri, i).mv(), median(tri, j).mv());
    const Multivector side_sum =
        wedge(side(tri, k).mv(), side(tri, i).mv()) +
        wedge(side(tri, i).mv(), side(tri, j).mv()) +
        wedge(side(tri, j).mv(), side(tri, k).mv());
    const std::string label = "m" + std::to_string(i) + " ^ m" +
                              std::to_string(j);
    require(mij == side_sum, label + " != ak^ai + ai^aj + aj^ak");
    require(mij == scale(area2, vertex_sum), label + " != 2*area*(A1+A2+A3)");
    require(wedge(median(tri, j).mv(), median(tri, i).mv()) == -mij,
            label + " is not antisymmetric");
    require(incident(tri.vertex(i), median(tri, i)),
            "median misses its vertex");
  }

  const Point g = centroid(tri);
  const Rational three{3};
  const CoordPoint mean{(t[0].x + t[1].x + t[2].x) / three,
                        (t[0].y + t[1].y + t[2].y) / three};
  require(g == point_from_xy(mean.x, mean.y),
          "centroid is not the coordinate mean");
}

void thales_case(std::size_t, CaseRng &rng) {
  const auto t = rng.triangle();
  const Triangle tri(rng.point(t[0]), rng.point(t[1]), rng.point(t[2]));
  Rational lambda;
  do {
    lambda = rng.nonzero_rational(3, 10);
  } while (lambda == Rational{1});
  const Rational one_minus = Rational{1} - lambda;

  const Multivector &a1 = tri.vertex(1).mv();
  const Multivector &a2 = tri.vertex(2).mv();
  const Multivector &a3 = tri.vertex(3).mv();
  const Multivector b2 = scale(one_minus, a1) + scale(lambda, a2);
  const Multivector b3 = scale(one_minus, a1) + scale(lambda, a3);

  const Multivector meet = wedge(join(a2, a3), join(b2, b3));
  require(!meet.is_zero(), "Thales lines coincide");
  require(is_ideal_point(Point(meet)), "Thales meet is not ideal");
  require(meet == scale(lambda * one_minus * tri.area2(), a2 - a3),
          "Thales meet != lambda(1-lambda)*2*area*(A2-A3)");
}

Versor random_versor(std::size_t index, CaseRng &rng) {
  switch (index % 4) {
  case 0:
  case 1:
    return reflection(rng.non_null_line());
  case 2:
    return rotor(rng.non_null_line(), rng.non_null_line());
  default: {
    // Two parallels: a translation.
    const CoordLine l = rng.coord_line();
    const CoordLine m{l.a, l.b, l.c + rng.nonzero_rational()};
    return rotor(rng.line(l), rng.line(m));
  }
  }
}

Point image(const Versor &v, const Point &p) { return Point(apply(v, p.mv())); }
Line image(const Versor &v, const Line &l) { return Line(apply(v, l.mv())); }

void isometry_case(std::size_t index, CaseRng &rng) {
  const Versor v = random_versor(index, rng);
  const auto t = rng.triangle();
  const Point a = rng.point(t[0]);
  const Point b = rng.point(t[1]);
  const Point c = rng.point(t[2]);
  const Line l = rng.non_null_line();
  const Line m = rng.non_null_line();

  require(quadrance(image(v, a), image(v, b)) == quadrance(a, b),
          "quadrance not preserved");
  require(spread(image(v, l), image(v, m)) == spread(l, m),
          "spread not preserved");

  require(incident(a, l) == incident(image(v, a), image(v, l)),
          "incidence of a random pair changed");
  Multivector on_l;
  do {
    on_l = wedge(l.mv(), rng.non_null_line().mv());
  } while (on_l.is_zero());
  const Point p(on_l);
  require(incident(image(v, p), image(v, l)), "incidence not preserved");

  const Rational before = signed_area2(a, b, c);
  const Rational after =
      signed_area2(image(v, a), image(v, b), image(v, c));
  if (v.parity() == Parity::Odd) {
    require(after == -before, "reflection did not reverse orientation");
    const Line &mirror = v.first();
    const CoordPoint mirrored = oracle::reflect_coords(
        {mirror.a(), mirror.b(), mirror.c()}, t[0]);
    require(projectively_equal(image(v, a),
                               point_from_xy(mirrored.x, mirrored.y)),
            "reflection disagrees with the coordinate mirror");
  } else {
    require(after == before, "even versor changed orientation");
  }
}

void rotor_case(std::size_t, CaseRng &rng) {
  const Line l = rng.non_null_line();
  const Line m = rng.non_null_line();
  const Versor r = rotor(l, m);
  const Rational norms = l.norm_squared() * m.norm_squared();
  const Rational s = spread(l, m).value;
  const Rational c = cross(l, m);

  const Rational r0 = rotor_scalar_part(r);
  require(c * norms == r0 * r0, "cross*l^2m^2 != <ml>_0^2");
  const Rational r2sq =
      scalar_of(square(rotor_point_part(r)), "<ml>_2 squared");
  require(s * norms == -r2sq, "spread*l^2m^2 != -<ml>_2^2");
  require(r.scalar_norm() == norms, "R reverse(R) != l^2 m^2");

  const Line mirrored(apply(reflection(m), l.mv()));
  require(spread(l, mirrored).value == Rational{4} * s * c,
          "spread(l, mlm) != 4 s c");
}

// ---------------------------------------------------------------------------
// Supplementary invariants.

void reversal_case(std::size_t, CaseRng &rng) {
  const Multivector x = rng.multivector();
  const Multivector y = rng.multivector();
  require(reverse(geometric_product(x, y)) ==
              geometric_product(reverse(y), reverse(x)),
          "reverse(XY) != reverse(Y)reverse(X)");
  require(reverse(reverse(x)) == x, "reversal is not an involution");
  require(dual(dual(x)) == x, "J is not an involution");
  Multivector sum;
  for (int k = 0; k <= 3; ++k)
    sum += grade_part(x, Grade(k));
  require(sum == x, "grade parts do not sum to X");

  // Blades: a vector and a bivector blade.
  const Multivector a = rng.vector();
  const Multivector b = wedge(rng.vector(), rng.vector());
  require(dual(wedge(a, b)) == join(dual(a), dual(b)),
          "J(a^b) != J(a) v J(b)");
  require(join(a, b) == dual(wedge(dual(a), dual(b))),
          "join is not the dual of the wedge of duals");
}

void incidence_case(std::size_t index, CaseRng &rng) {
  const CoordLine cl = rng.coord_line();
  const Line l = rng.line(cl);
  const Rational w = rng.rational();
  Point p = (w.is_zero())
                ? point_from_xyz(rng.nonzero_rational(), rng.rational(), w)
                : point_from_xyz(rng.rational(), rng.rational(), w);
  if (index % 2 == 0) {
    // Force incidence by solving for the weight when c != 0.
    if (!cl.c.is_zero() && !(p.x().is_zero() && p.y().is_zero()))
      p = point_from_xyz(p.x(), p.y(),
                         -(cl.a * p.x() + cl.b * p.y()) / cl.c);
  }
  const bool coordinate =
      (cl.a * p.x() + cl.b * p.y() + cl.c * p.weight()).is_zero();
  const bool by_meet = wedge(p.mv(), l.mv()).is_zero();
  const bool by_join = join(p.mv(), l.mv()).is_zero();
  require(incident(p, l) == coordinate, "incident disagrees with ax+by+cz");
  require(by_meet == by_join, "P^m and PvM disagree");
}

void trig_symmetry_case(std::size_t, CaseRng &rng) {
  const Point a = rng.proper_point();
  const Point b = rng.proper_point();
  const Line l = rng.non_null_line();
  const Line m = rng.non_null_line();
  require(quadrance(a, b) == quadrance(b, a), "quadrance not symmetric");
  require(spread(l, m) == spread(m, l), "spread not symmetric");
  require(cross(l, m) == cross(m, l), "cross not symmetric");
  require(quadrance(a, b).value.is_zero() == projectively_equal(a, b),
          "Q = 0 does not match projective equality");
  require(quadrance(a, scaled(rng.nonzero_rational(), a)).value.is_zero(),
          "Q(A, kA) != 0");
  require(spread(l, m).value.is_zero() == is_parallel(l, m),
          "spread 0 does not match parallel");
  require((spread(l, m).value == Rational{1}) == is_perpendicular(l, m),
          "spread 1 does not match perpendicular");
  const Point n = normalize_point(scaled(rng.nonzero_rational(), a));
  require(normalize_point(n) == n && n == a,
          "normalization is not idempotent");
}

void construction_case(std::size_t, CaseRng &rng) {
  const CoordPoint cp = rng.coord_point();
  const CoordLine cl = rng.coord_line();
  const Point a = rng.point(cp);
  const Line l = rng.line(cl);

  const Line perp = altitude(a, l);
  require(incident(a, perp) && is_perpendicular(perp, l),
          "altitude is not through A and perpendicular");
  const Line par = parallel_through(a, l);
  require(incident(a, par) && is_parallel(par, l) &&
              spread(par, l).value.is_zero(),
          "parallel-through is not through A with spread 0");
  const Point f = foot(a, l);
  const CoordPoint proj = oracle::project(cl, cp);
  require(incident(f, l) && normalize_point(f) == point_from_xy(proj.x, proj.y),
          "foot disagrees with orthogonal projection");

  const CoordPoint cq = rng.coord_point();
  if (cq == cp)
    return;
  const Point b = rng.point(cq);
  const Line ab = join_points(a, b);
  require(incident(a, ab) && incident(b, ab), "join misses an input");
  const Line bis = perpendicular_bisector(a, b);
  require(incident(midpoint(a, b), bis) && is_perpendicular(bis, ab),
          "bisector not through midpoint or not perpendicular");
  const Multivector x = wedge(bis.mv(), rng.non_null_line().mv());
  if (!x.is_zero() && !is_ideal_point(Point(x))) {
    const Point px(x);
    require(quadrance(a, px) == quadrance(b, px),
            "bisector point is not equidistant");
  }

  const CoordLine cm = rng.coord_line();
  const Rational det = cl.a * cm.b - cm.a * cl.b;
  if (!det.is_zero()) {
    const CoordPoint ix = oracle::intersect(cl, cm);
    require(normalize_point(meet_lines(l, rng.line(cm))) ==
                point_from_xy(ix.x, ix.y),
            "meet disagrees with Cramer's rule");
  }
}

void composition_case(std::size_t index, CaseRng &rng) {
  const Line l = rng.non_null_line();
  const Line m = rng.non_null_line();
  const Multivector x = rng.multivector();
  const Versor r = rotor(l, m);
  require(apply(r, x) == apply(reflection(m), apply(reflection(l), x)),
          "rotor disagrees with two reflections");
  const Multivector centre = wedge(m.mv(), l.mv());
  require(projectively_equal(apply(r, centre), centre),
          "rotor moves its centre");

  // Translation: parallel mirrors.
  const CoordLine cl{l.a(), l.b(), l.c()};
  const CoordLine cm{cl.a, cl.b, cl.c + rng.nonzero_rational()};
  const Versor tr = rotor(rng.line(cl), rng.line(cm));
  const Point ideal = point_from_xyz(rng.nonzero_rational(), rng.rational(),
                                     Rational{0});
  require(projectively_equal(image(tr, ideal), ideal),
          "translation moves an ideal point");
  const Point proper = rng.proper_point();
  require(!projectively_equal(image(tr, proper), proper),
          "translation fixes a proper point");
  (void)index;
}

std::vector<Suite> build() {
  std::vector<Suite> s;
  s.push_back({"blade-table", "64 blade products against generator rewriting",
               1, kBladeCount * kBladeCount, blade_table_case});
  s.push_back({"associativity", "(XY)Z = X(YZ) and lm = l.m + l^m", 2, 600,
               associativity_case});
  s.push_back({"quadrance-oracle",
               "(A v B)^2 and the quotient form against coordinates", 3, 1200,
               quadrance_case});
  s.push_back({"spread-oracle", "spread against the coordinate formula", 4,
               1200, spread_case});
  s.push_back({"spread-cross-twist", "s + c = 1 and t = s / c", 5, 1200,
               spread_cross_case});
  s.push_back({"triangle", "2*area, a_i ^ a_j and the triple wedge", 6, 600,
               triangle_case});
  s.push_back({"medians", "median meets and the centroid", 7, 600,
               median_case});
  s.push_back({"thales", "parallel lines through scaled vertices", 8, 300,
               thales_case});
  s.push_back({"isometry", "sandwiches preserve Q, s, incidence", 9, 400,
               isometry_case});
  s.push_back({"rotor", "rotor parts and the double-angle spread", 10, 400,
               rotor_case});
  s.push_back({"reversal-duality", "reversion, J and grade projection", 0,
               300, reversal_case});
  s.push_back({"incidence", "P^m = 0 iff P v m = 0 iff ax+by+cz = 0", 0, 400,
               incidence_case});
  s.push_back({"trig-symmetry", "symmetry, scale invariance, degeneracy", 0,
               400, trig_symmetry_case});
  s.push_back({"constructions", "altitude, parallel, foot, bisector, meet", 0,
               400, construction_case});
  s.push_back({"composition", "thick sandwich, centre, translations", 0, 300,
               composition_case});
  return s;
}

} // namespace

const std::vector<Suite> &all_suites() {
  static const std::vector<Suite> suites = build();
  return suites;
}

std::vector<Suite> suites_for_criterion(int criterion) {
  std::vector<Suite> out;
  for (const auto &s : all_suites())
    if (s.criterion == criterion)
      out.push_back(s);
  return out;
}

} // namespace pga::verify
