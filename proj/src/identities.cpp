#include "qplanes/identities.hpp"

#include "qplanes/poly.hpp"

namespace qplanes {

namespace {

// Numerator and denominator of t4 = -N/D and their t2-, t3-partials, all as
// polynomials in t1 with t2, t3 fixed.
struct ClosedForm {
  Poly n, d, n2, d2, n3, d3;
};

ClosedForm closed_form(const QuarticCurve &curve, const Rational &t2, const Rational &t3)
{
  const Rational &p = curve.p();
  const Rational &q = curve.q();
  const Rational &r = curve.r();
  const Rational &s = curve.s();
  ClosedForm f;
  // Each is a + b t1.
  f.n = Poly{r * t2 * t3 + q * (t2 + t3) + p, s * t2 * t3 + r * (t2 + t3) + q};
  f.d = Poly{s * t2 * t3 + r * (t2 + t3) + q, t2 * t3 + s * (t2 + t3) + r};
  f.n2 = Poly{r * t3 + q, s * t3 + r};
  f.d2 = Poly{s * t3 + r, t3 + s};
  f.n3 = Poly{r * t2 + q, s * t2 + r};
  f.d3 = Poly{s * t2 + r, t2 + s};
  return f;
}

// dt4/dti = -(Ni D - N Di) / D^2; the quotient of two partials drops -1/D^2.
struct QuotientPolys {
  Poly top;    // N2 D - N D2
  Poly bottom; // N3 D - N D3
  Poly d;
};

QuotientPolys quotient_polys(const QuarticCurve &curve, const Rational &t2, const Rational &t3)
{
  const ClosedForm f = closed_form(curve, t2, t3);
  return {f.n2 * f.d - f.n * f.d2, f.n3 * f.d - f.n * f.d3, f.d};
}

void guard(const QuotientPolys &polys, const Rational &t1)
{
  if (polys.d(t1) == 0) {
    throw GuardError(IdentityGuard::FourthAtInfinity,
                     "t4 denominator vanishes at t1 = " + to_string(t1));
  }
  if (polys.bottom(t1) == 0) {
    throw GuardError(IdentityGuard::HZero,
                     "h(t1, t2) vanishes (dt4/dt3 = 0) at t1 = " + to_string(t1));
  }
}

}  // namespace

Rational h_polynomial(const QuarticCurve &curve, const Rational &t1, const Rational &t2)
{
  const Rational &p = curve.p();
  const Rational &q = curve.q();
  const Rational &r = curve.r();
  const Rational &s = curve.s();
  return (s * s - r) * t1 * t1 * t2 * t2 + (r * s - q) * t1 * t2 * (t1 + t2) +
         (r * r - q * s) * (t1 * t1 + t2 * t2) + (r * r - p) * t1 * t2 +
         (q * r - p * s) * (t1 + t2) + q * q - p * r;
}

Rational partial_quotient(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
                          const Rational &t3)
{
  const QuotientPolys polys = quotient_polys(curve, t2, t3);
  guard(polys, t1);
  return polys.top(t1) / polys.bottom(t1);
}

bool quotient_independence_check(const QuarticCurve &curve, std::span<const Rational> t1_samples,
                                 const Rational &t2, const Rational &t3)
{
  const QuotientPolys polys = quotient_polys(curve, t2, t3);
  std::optional<Rational> first;
  bool same = true;
  for (const auto &t1 : t1_samples) {
    guard(polys, t1);
    const Rational value = polys.top(t1) / polys.bottom(t1);
    if (!first) {
      first = value;
    } else if (value != *first) {
      same = false;
    }
  }
  return same;
}

IdentitySides rsz_identity_sides(const QuarticCurve &curve, const Rational &t1,
                                 const Rational &t2, const Rational &t3)
{
  const QuotientPolys polys = quotient_polys(curve, t2, t3);
  guard(polys, t1);
  const Rational h = h_polynomial(curve, t1, t2);
  if (h == 0) {
    throw GuardError(IdentityGuard::HZero, "h(t1, t2) vanishes at t1 = " + to_string(t1));
  }
  const Rational top = polys.top(t1);
  const Rational bottom = polys.bottom(t1);
  const Rational top_d = polys.top.derivative()(t1);
  const Rational bottom_d = polys.bottom.derivative()(t1);
  IdentitySides sides;
  sides.derivative = (top_d * bottom - top * bottom_d) / (bottom * bottom);
  sides.closed_form = catalecticant(fundamental_quartic(curve)) *
                      coplanarity_form(curve, t1, t1, t2, t3) * (t3 - t2) / (h * h);
  return sides;
}

bool rsz_identity_check(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
                        const Rational &t3)
{
  const auto sides = rsz_identity_sides(curve, t1, t2, t3);
  return sides.derivative == sides.closed_form;
}

}  // namespace qplanes
