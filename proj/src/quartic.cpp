#include "qplanes/quartic.hpp"

#include "qplanes/errors.hpp"
#include "qplanes/pointset_io.hpp"

#include <fstream>
#include <istream>

namespace qplanes {

namespace {

constexpr std::array<int, 5> kBinom4{1, 4, 6, 4, 1};

// Coefficients of (a x + b y)^k in powers x^(k-j) y^j.
std::vector<Rational> power_of_linear(const Rational &a, const Rational &b, int k)
{
  std::vector<Rational> poly{Rational(1)};
  for (int step = 0; step < k; ++step) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j] * a;
      next[j + 1] += poly[j] * b;
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

QuarticCurve::QuarticCurve(Rational p, Rational q, Rational r, Rational s)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), s_(std::move(s))
{
  const Rational s2 = s_ * s_;
  if (r_ == s2 && q_ == s2 * s_ && p_ == s2 * s2) {
    throw PreconditionError("degenerate curve: r = s^2, q = s^3 and p = s^4 (" + str() + ")");
  }
}

std::string QuarticCurve::str() const
{
  return "p=" + to_string(p_) + " q=" + to_string(q_) + " r=" + to_string(r_) +
         " s=" + to_string(s_);
}

Rational BinaryQuartic::monomial(int i) const { return kBinom4[i] * c[i]; }

BinaryQuartic BinaryQuartic::substitute(const Rational &a, const Rational &b, const Rational &cc,
                                        const Rational &d) const
{
  std::array<Rational, 5> mono{};
  for (int i = 0; i <= 4; ++i) {
    const auto left = power_of_linear(a, b, 4 - i);
    const auto right = power_of_linear(cc, d, i);
    const Rational weight = monomial(i);
    for (std::size_t x = 0; x < left.size(); ++x) {
      for (std::size_t y = 0; y < right.size(); ++y) {
        mono[x + y] += weight * left[x] * right[y];
      }
    }
  }
  BinaryQuartic out;
  for (int j = 0; j <= 4; ++j) {
    out.c[j] = mono[j] / kBinom4[j];
  }
  return out;
}

RMatrix BinaryQuartic::catalecticant_matrix() const
{
  return RMatrix{{c[0], c[1], c[2]}, {c[1], c[2], c[3]}, {c[2], c[3], c[4]}};
}

HPoint point_at(const QuarticCurve &curve, const Rational &t)
{
  const Rational t2 = t * t;
  return HPoint(t2 * t2 - curve.p(), t2 * t + curve.q(), t2 - curve.r(), t + curve.s());
}

HPoint point_at(const QuarticCurve &curve, const Param &t)
{
  if (std::holds_alternative<AtInfinity>(t)) {
    return HPoint(1, 0, 0, 0);
  }
  return point_at(curve, std::get<Rational>(t));
}

Vec4 tangent_at(const QuarticCurve &, const Rational &t)
{
  return Vec4{4 * t * t * t, 3 * t * t, 2 * t, Rational(1)};
}

Rational coplanarity_form(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
                          const Rational &t3, const Rational &t4)
{
  const Rational e1 = t1 + t2 + t3 + t4;
  const Rational e2 = t1 * t2 + t1 * t3 + t1 * t4 + t2 * t3 + t2 * t4 + t3 * t4;
  const Rational e3 = t1 * t2 * t3 + t1 * t2 * t4 + t1 * t3 * t4 + t2 * t3 * t4;
  const Rational e4 = t1 * t2 * t3 * t4;
  return e4 + curve.s() * e3 + curve.r() * e2 + curve.q() * e1 + curve.p();
}

Param solve_t4(const QuarticCurve &curve, const Rational &t1, const Rational &t2,
               const Rational &t3)
{
  const Rational e1 = t1 + t2 + t3;
  const Rational e2 = t1 * t2 + t1 * t3 + t2 * t3;
  const Rational e3 = t1 * t2 * t3;
  const Rational num = curve.s() * e3 + curve.r() * e2 + curve.q() * e1 + curve.p();
  const Rational den = e3 + curve.s() * e2 + curve.r() * e1 + curve.q();
  if (den == 0) {
    if (num == 0) {
      throw PreconditionError("plane meets curve in a line's worth of parameters (t = " +
                              to_string(t1) + ", " + to_string(t2) + ", " + to_string(t3) +
                              ")");
    }
    return AtInfinity{};
  }
  return Rational(-num / den);
}

BinaryQuartic fundamental_quartic(const QuarticCurve &curve)
{
  return BinaryQuartic{{Rational(1), curve.s(), curve.r(), curve.q(), curve.p()}};
}

Rational catalecticant(const BinaryQuartic &bq)
{
  const auto &c = bq.c;
  return c[0] * (c[2] * c[4] - c[3] * c[3]) - c[1] * (c[1] * c[4] - c[3] * c[2]) +
         c[2] * (c[1] * c[3] - c[2] * c[2]);
}

RMatrix quadric_system(const QuarticCurve &curve)
{
  const Rational &p = curve.p();
  const Rational &q = curve.q();
  const Rational &r = curve.r();
  const Rational &s = curve.s();
  // Rows: coefficients of t^4, t^3 (halved), t^2, t^1 (halved), t^0.
  return RMatrix{
      {-2 * r, 2 * s, 2, 1, 0, 0},
      {-2 * q, r, s, 0, 1, 0},
      {-2 * p, -2 * q, 0, -2 * r, 2 * s, 1},
      {0, -p, q, 0, -r, s},
      {2 * (p * r - q * q), -2 * (p * s - q * r), 2 * q * s, r * r, -2 * r * s, s * s},
  };
}

RMatrix quadric_from_nullvector(const std::vector<Rational> &v)
{
  const Rational &a13 = v[0];
  const Rational &a14 = v[1];
  const Rational &a24 = v[2];
  const Rational &a33 = v[3];
  const Rational &a34 = v[4];
  const Rational &a44 = v[5];
  return RMatrix{
      {0, 0, a13, a14},
      {0, -2 * a13, -a14, a24},
      {a13, -a14, a33, a34},
      {a14, a24, a34, a44},
  };
}

SpeciesReport classify_species(const QuarticCurve &curve)
{
  SpeciesReport report;
  report.catalecticant = catalecticant(fundamental_quartic(curve));
  const auto basis = nullspace(quadric_system(curve));
  report.nullity = basis.size();
  for (const auto &v : basis) {
    report.pencil_basis.push_back(quadric_from_nullvector(v));
  }
  report.species = report.nullity >= 2 ? Species::First : Species::Second;
  if ((report.species == Species::First) != (report.catalecticant == 0)) {
    throw VerificationError("species mismatch for " + curve.str() + ": nullity " +
                            std::to_string(report.nullity) + ", catalecticant " +
                            to_string(report.catalecticant));
  }
  return report;
}

std::array<Rational, 6> six_minors(const QuarticCurve &curve)
{
  const RMatrix system = quadric_system(curve);
  std::array<Rational, 6> out;
  for (std::size_t i = 0; i < 6; ++i) {
    out[i] = determinant(system.without_column(5 - i));
  }
  return out;
}

std::array<Rational, 6> six_minor_factored(const QuarticCurve &curve)
{
  const Rational &p = curve.p();
  const Rational &q = curve.q();
  const Rational &r = curve.r();
  const Rational &s = curve.s();
  const Rational cat = catalecticant(fundamental_quartic(curve));
  return {
      Rational(-4 * cat * (q * q - p * r)),
      Rational(2 * cat * (q * r - p * s)),
      Rational(-4 * cat * (q * s - p)),
      Rational(2 * cat * (r * r - 2 * q * s + p)),
      Rational(2 * cat * (r * s - q)),
      Rational(-2 * cat * (s * s - r)),
  };
}

QuarticCurve read_curve(std::istream &in)
{
  const auto records = read_records(in);
  if (records.size() != 1 || records[0].size() != 4) {
    throw PreconditionError("curve file must hold exactly one record \"p q r s\"");
  }
  const auto &f = records[0];
  try {
    return QuarticCurve(parse_rational(f[0]), parse_rational(f[1]), parse_rational(f[2]),
                        parse_rational(f[3]));
  } catch (const PreconditionError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    throw PreconditionError(std::string("curve file: ") + e.what());
  }
}

QuarticCurve load_curve(const std::string &path)
{
  std::ifstream in(path);
  if (!in) {
    throw PreconditionError("cannot open curve file '" + path + "'");
  }
  return read_curve(in);
}

}  // namespace qplanes
