#pragma once

// Exact checks around the closed form t4(t1, t2, t3) of the fourth coplanar
// parameter and the t1-independence of (dt4/dt2) / (dt4/dt3).

#include "qplanes/errors.hpp"
#include "qplanes/quartic.hpp"

#include <span>

namespace qplanes {

enum class IdentityGuard {
  FourthAtInfinity, // denominator of t4 vanishes
  HZero,            // h(t1, t2) = 0, so dt4/dt3 vanishes
};

class GuardError : public PreconditionError {
public:
  GuardError(IdentityGuard guard, const std::string &what)
      : PreconditionError(what), guard_(guard)
  {
  }
  IdentityGuard guard() const { return guard_; }

private:
  IdentityGuard guard_;
};

// h(t1, t2) = (s^2 - r) t1^2 t2^2 + (rs - q) t1 t2 (t1 + t2) + (r^2 - qs)(t1^2 + t2^2)
//           + (r^2 - p) t1 t2 + (qr - ps)(t1 + t2) + q^2 - pr
Rational h_polynomial(const QuarticCurve &curve, const Rational &t1, const Rational &t2);

// (dt4/dt2) / (dt4/dt3) at one point, from the quotient rule on the closed form.
Rational partial_quotient(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
                          const Rational &t3);

// True iff partial_quotient takes one value over all t1 samples.
bool quotient_independence_check(const QuarticCurve &curve, std::span<const Rational> t1_samples,
                                 const Rational &t2, const Rational &t3);

struct IdentitySides {
  Rational derivative; // d/dt1 of the partial quotient
  Rational closed_form; // cat F(t1,t1,t2,t3)(t3-t2) / h(t1,t2)^2
};

IdentitySides rsz_identity_sides(const QuarticCurve &curve, const Rational &t1,
                                 const Rational &t2, const Rational &t3);

bool rsz_identity_check(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
                        const Rational &t3);

}  // namespace qplanes
