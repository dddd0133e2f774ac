#pragma once

#include <optional>

#include "pga/geometry.hpp"

namespace pga {

enum class Parity { Odd, Even };

/// A product of one or two non-null lines acting by sandwiching. Odd
/// versors are reflections; even versors m*l are rotations about m ^ l, or
/// translations when the lines are parallel. Never normalized, so images
/// agree with the geometric image only up to a nonzero scale.
class Versor {
public:
  Parity parity() const { return parity_; }
  const Multivector &mv() const { return mv_; }

  /// The mirror line(s): {m} for a reflection, {l, m} for the rotor m*l.
  const Line &first() const { return first_; }
  const std::optional<Line> &second() const { return second_; }

  /// V * reverse(V), a nonzero scalar.
  Rational scalar_norm() const;

private:
  friend Versor reflection(const Line &m);
  friend Versor rotor(const Line &l, const Line &m);

  Versor(Parity p, Multivector mv, Line first, std::optional<Line> second)
      : parity_(p), mv_(std::move(mv)), first_(std::move(first)),
        second_(std::move(second)) {}

  Parity parity_;
  Multivector mv_;
  Line first_;
  std::optional<Line> second_;
};

/// Reflection in m, applied as X -> m X m. Throws NullLine.
Versor reflection(const Line &m);

/// The rotor m*l: reflect in l, then in m. Throws NullLine.
Versor rotor(const Line &l, const Line &m);

/// m X m for odd versors, R X reverse(R) for even ones. Any grade of X.
Multivector apply(const Versor &v, const Multivector &x);

/// Sandwich of x by the line m, without building a versor first.
Multivector reflect(const Line &m, const Multivector &x);

/// <R>_0 of an even versor R = m*l, i.e. m . l. Throws Type for odd.
Rational rotor_scalar_part(const Versor &v);

/// <R>_2 of an even versor R = m*l, i.e. m ^ l. Throws Type for odd.
Multivector rotor_point_part(const Versor &v);

} // namespace pga
