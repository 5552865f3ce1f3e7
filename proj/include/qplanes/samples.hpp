#pragma once

// Seeded random rationals and curves for the verification suites.

#include "qplanes/quartic.hpp"
#include "qplanes/random.hpp"

namespace qplanes {

// numerator in [-bound, bound], denominator in [1, den_bound].
Rational random_rational(Rng &rng, long bound, long den_bound = 1);

// Random non-degenerate curve with integer coefficients in [-bound, bound].
QuarticCurve random_curve(Rng &rng, long bound);

// Random non-degenerate curve with vanishing catalecticant: q, r, s are drawn
// and p solves pr - q^2 - ps^2 + 2qrs - r^3 = 0 (r != s^2 is enforced).
QuarticCurve random_first_species_curve(Rng &rng, long bound);

}  // namespace qplanes
