#pragma once

// Rational space quartics in the normal form [t^4 - p, t^3 + q, t^2 - r, t + s].

#include "qplanes/geom.hpp"
#include "qplanes/linalg.hpp"

#include <iosfwd>
#include <variant>
#include <vector>

namespace qplanes {

struct AtInfinity {
  friend bool operator==(AtInfinity, AtInfinity) { return true; }
};

// Curve parameter: a rational t or the point at infinity.
using Param = std::variant<Rational, AtInfinity>;

class QuarticCurve {
public:
  // Throws PreconditionError when r = s^2, q = s^3 and p = s^4 all hold.
  QuarticCurve(Rational p, Rational q, Rational r, Rational s);

  const Rational &p() const { return p_; }
  const Rational &q() const { return q_; }
  const Rational &r() const { return r_; }
  const Rational &s() const { return s_; }

  std::string str() const;

  friend bool operator==(const QuarticCurve &, const QuarticCurve &) = default;

private:
  Rational p_, q_, r_, s_;
};

// c0 l^4 + 4 c1 l^3 m + 6 c2 l^2 m^2 + 4 c3 l m^3 + c4 m^4.
struct BinaryQuartic {
  std::array<Rational, 5> c;

  // Coefficient of l^(4-i) m^i, i.e. binom(4, i) * c[i].
  Rational monomial(int i) const;

  // g(a l' + b m', c l' + d m') expressed in the same basis.
  BinaryQuartic substitute(const Rational &a, const Rational &b, const Rational &cc,
                           const Rational &d) const;

  RMatrix catalecticant_matrix() const;

  friend bool operator==(const BinaryQuartic &, const BinaryQuartic &) = default;
};

enum class Species { First, Second };

struct SpeciesReport {
  Species species;
  Rational catalecticant;
  // Symmetric 4x4 matrices A with x(t)^T A x(t) = 0 identically.
  std::vector<RMatrix> pencil_basis;
  std::size_t nullity;
};

HPoint point_at(const QuarticCurve &curve, const Param &t);
HPoint point_at(const QuarticCurve &curve, const Rational &t);

// Derivative of the affine parametrization, (4t^3, 3t^2, 2t, 1).
Vec4 tangent_at(const QuarticCurve &curve, const Rational &t);

Rational coplanarity_form(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
                          const Rational &t3, const Rational &t4);

// Fourth intersection parameter of the plane through t1, t2, t3. Throws
// PreconditionError when numerator and denominator of the closed form both vanish.
Param solve_t4(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
               const Rational &t3);

BinaryQuartic fundamental_quartic(const QuarticCurve &curve);

Rational catalecticant(const BinaryQuartic &bq);

// Coefficient system of x(t)^T A x(t) = 0 after the forced substitutions
// a11 = a12 = 0, a22 = -2 a13, a23 = -a14. Columns: a13 a14 a24 a33 a34 a44.
RMatrix quadric_system(const QuarticCurve &curve);

// Rebuilds A from a nullvector (a13, a14, a24, a33, a34, a44).
RMatrix quadric_from_nullvector(const std::vector<Rational> &v);

SpeciesReport classify_species(const QuarticCurve &curve);

// The six 5x5 minors of quadric_system, ordered so that
//   m[0] = -4 cat (q^2 - pr)      m[1] = 2 cat (qr - ps)   m[2] = -4 cat (qs - p)
//   m[3] =  2 cat (r^2 - 2qs + p) m[4] = 2 cat (rs - q)    m[5] = -2 cat (s^2 - r)
// m[i] deletes column 5 - i.
std::array<Rational, 6> six_minors(const QuarticCurve &curve);

// The factored forms above, evaluated directly.
std::array<Rational, 6> six_minor_factored(const QuarticCurve &curve);

// Curve file: a single record "p q r s".
QuarticCurve read_curve(std::istream &in);
QuarticCurve load_curve(const std::string &path);

}  // namespace qplanes
