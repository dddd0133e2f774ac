#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "pga/geometry.hpp"
#include "pga/oracle.hpp"

namespace pga::verify {

/// Random exact inputs for one test case. Seeded from (suite seed, case
/// index) so a case draws the same values no matter which thread runs it.
class CaseRng {
public:
  CaseRng(std::uint64_t seed, std::uint64_t case_index);

  std::int64_t integer(std::int64_t lo, std::int64_t hi);

  /// Value in [-bound, bound] with denominator at most max_den.
  Rational rational(std::int64_t bound = 10, std::int64_t max_den = 10);
  Rational nonzero_rational(std::int64_t bound = 10,
                            std::int64_t max_den = 10);

  Multivector multivector();
  /// Random 1-vector (may be null or zero).
  Multivector vector();

  oracle::CoordPoint coord_point();
  /// (a, b) != (0, 0).
  oracle::CoordLine coord_line();

  Point point(const oracle::CoordPoint &p) const;
  Line line(const oracle::CoordLine &l) const;

  Point proper_point() { return point(coord_point()); }
  Line non_null_line() { return line(coord_line()); }

  /// Three non-collinear coordinate points.
  std::array<oracle::CoordPoint, 3> triangle();

  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

} // namespace pga::verify
