#include "qplanes/samples.hpp"

#include "qplanes/errors.hpp"

namespace qplanes {

Rational random_rational(Rng &rng, long bound, long den_bound)
{
  Rational out(draw_int(rng, -bound, bound), draw_int(rng, 1, den_bound));
  out.canonicalize();
  return out;
}

QuarticCurve random_curve(Rng &rng, long bound)
{
  for (;;) {
    const Rational p = draw_int(rng, -bound, bound);
    const Rational q = draw_int(rng, -bound, bound);
    const Rational r = draw_int(rng, -bound, bound);
    const Rational s = draw_int(rng, -bound, bound);
    try {
      return QuarticCurve(p, q, r, s);
    } catch (const PreconditionError &) {
    }
  }
}

QuarticCurve random_first_species_curve(Rng &rng, long bound)
{
  for (;;) {
    const Rational q = draw_int(rng, -bound, bound);
    const Rational r = draw_int(rng, -bound, bound);
    const Rational s = draw_int(rng, -bound, bound);
    if (r == s * s) {
      continue;
    }
    const Rational p = (q * q - 2 * q * r * s + r * r * r) / (r - s * s);
    try {
      return QuarticCurve(p, q, r, s);
    } catch (const PreconditionError &) {
    }
  }
}

}  // namespace qplanes
