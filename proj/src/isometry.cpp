#include "pga/isometry.hpp"

namespace pga {

namespace {

void require_non_null(const Line &l) {
  if (is_null_line(l))
    throw Error(ErrorKind::NullLine,
                "isometry needs a non-null mirror line, got [" + l.mv().str() +
                    "]");
}

void require_even(const Versor &v) {
  if (v.parity() != Parity::Even)
    throw Error(ErrorKind::Type, "rotor parts need an even versor");
}

} // namespace

Rational Versor::scalar_norm() const {
  return geometric_product(mv_, reverse(mv_))[Blade::S];
}

Versor reflection(const Line &m) {
  require_non_null(m);
  return Versor(Parity::Odd, m.mv(), m, std::nullopt);
}

Versor rotor(const Line &l, const Line &m) {
  require_non_null(l);
  require_non_null(m);
  return Versor(Parity::Even, geometric_product(m.mv(), l.mv()), l, m);
}

Multivector apply(const Versor &v, const Multivector &x) {
  if (v.parity() == Parity::Odd)
    return geometric_product(geometric_product(v.mv(), x), v.mv());
  return geometric_product(geometric_product(v.mv(), x), reverse(v.mv()));
}

Multivector reflect(const Line &m, const Multivector &x) {
  return apply(reflection(m), x);
}

Rational rotor_scalar_part(const Versor &v) {
  require_even(v);
  return v.mv()[Blade::S];
}

Multivector rotor_point_part(const Versor &v) {
  require_even(v);
  return grade_part(v.mv(), Grade(2));
}

} // namespace pga
