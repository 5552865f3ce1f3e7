#include "doctest.h"
#include "oracles.hpp"

#include "qplanes/identities.hpp"
#include "qplanes/samples.hpp"

using namespace qplanes;

namespace {

Rational closed_form(const QuarticCurve &c, const Rational &t1, const Rational &t2, const Rational &t3)
{
  const Rational cat = oracle::catalecticant_formula(c.p(), c.q(), c.r(), c.s());
  const Rational f = oracle::coplanarity_form(c.p(), c.q(), c.r(), c.s(), {t1, t1, t2, t3});
  const Rational hh = oracle::h(c.p(), c.q(), c.r(), c.s(), t1, t2);
  return cat * f * (t3 - t2) / (hh * hh);
}

}  // namespace

TEST_CASE("h polynomial")
{
  Rng rng(79);
  for (int i = 0; i < 50; ++i) {
    const QuarticCurve c = random_curve(rng, 6);
    const Rational a = random_rational(rng, 6, 3), b = random_rational(rng, 6, 3);
    CHECK(h_polynomial(c, a, b) == oracle::h(c.p(), c.q(), c.r(), c.s(), a, b));
    CHECK(h_polynomial(c, a, b) == h_polynomial(c, b, a));
  }
}

TEST_CASE("quotient independence")
{
  const std::vector<Rational> t1s{1, 2, 3, 5};
  CHECK(quotient_independence_check(QuarticCurve(-1, 0, 0, 0), t1s, 7, 11));
  CHECK_FALSE(quotient_independence_check(QuarticCurve(2, 3, 5, 7), t1s, 7, 11));
  const std::vector<Rational> one{4};
  CHECK(quotient_independence_check(QuarticCurve(2, 3, 5, 7), one, 7, 11));

  Rng rng(83);
  for (int i = 0; i < 20; ++i) {
    const QuarticCurve c = random_first_species_curve(rng, 6);
    std::vector<Rational> samples;
    for (int k = 0; k < 4; ++k) {
      samples.push_back(random_rational(rng, 9, 2));
    }
    try {
      CHECK(quotient_independence_check(c, samples, 13, Rational(-17, 3)));
    } catch (const GuardError &) {
    }
  }
}

TEST_CASE("guards")
{
  // t1 = t2 = 0 on t1 t2 t3 t4 - 1: the plane's fourth point is at infinity.
  const QuarticCurve c(-1, 0, 0, 0);
  try {
    partial_quotient(c, 0, 0, 5);
    FAIL("expected a guard");
  } catch (const GuardError &e) {
    CHECK(e.guard() == IdentityGuard::FourthAtInfinity);
  }
}

TEST_CASE("identity for the derivative of the quotient")
{
  CHECK(rsz_identity_check(QuarticCurve(2, 3, 5, 7), 1, 2, 3));
  const auto sides = rsz_identity_sides(QuarticCurve(2, 3, 5, 7), 1, 2, 3);
  CHECK(sides.derivative == oracle::quotient_derivative(2, 3, 5, 7, 1, 2, 3));
  CHECK(sides.closed_form == closed_form(QuarticCurve(2, 3, 5, 7), 1, 2, 3));

  const auto equal = rsz_identity_sides(QuarticCurve(2, 3, 5, 7), 1, 4, 4);
  CHECK(equal.derivative == 0);
  CHECK(equal.closed_form == 0);

  Rng rng(89);
  int checked = 0;
  for (int curve_index = 0; curve_index < 20; ++curve_index) {
    const QuarticCurve c = curve_index % 4 ? random_curve(rng, 7) : random_first_species_curve(rng, 7);
    for (int k = 0; k < 5; ++k) {
      const Rational t1 = random_rational(rng, 9, 4), t2 = random_rational(rng, 9, 4),
                     t3 = random_rational(rng, 9, 4);
      try {
        const auto s = rsz_identity_sides(c, t1, t2, t3);
        // Left side against the interpolation oracle, right side against the
        // displayed closed form.
        CHECK(s.derivative == oracle::quotient_derivative(c.p(), c.q(), c.r(), c.s(), t1, t2, t3));
        CHECK(s.closed_form == closed_form(c, t1, t2, t3));
        CHECK(s.derivative == s.closed_form);
        ++checked;
      } catch (const GuardError &) {
      }
    }
  }
  CHECK(checked >= 90);
}
