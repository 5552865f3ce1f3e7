#include "qplanes/geom.hpp"

#include "qplanes/errors.hpp"

#include <numeric>
#include <sstream>

namespace qplanes {

namespace {

// Scales v so that its first nonzero entry is 1. Returns false on the zero vector.
template<std::size_t N>
bool normalize_leading(std::array<Rational, N> &v)
{
  for (std::size_t i = 0; i < N; ++i) {
    if (v[i] != 0) {
      const Rational lead = v[i];
      for (std::size_t j = i; j < N; ++j) {
        v[j] /= lead;
      }
      return true;
    }
  }
  return false;
}

template<std::size_t N>
std::string join(const std::array<Rational, N> &v)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < N; ++i) {
    os << (i ? " " : "") << to_string(v[i]);
  }
  return os.str();
}

Rational det3(const Rational &a, const Rational &b, const Rational &c,
              const Rational &d, const Rational &e, const Rational &f,
              const Rational &g, const Rational &h, const Rational &i)
{
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// The four 3x3 minors of the 3x4 matrix with rows a, b, c; entry k omits column k
// and carries the cofactor sign, so the result annihilates a, b and c.
Vec4 cofactor_covector(const Vec4 &a, const Vec4 &b, const Vec4 &c)
{
  Vec4 out;
  for (int k = 0; k < 4; ++k) {
    std::array<int, 3> cols{};
    int m = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != k) {
        cols[m++] = j;
      }
    }
    Rational minor = det3(a[cols[0]], a[cols[1]], a[cols[2]],
                          b[cols[0]], b[cols[1]], b[cols[2]],
                          c[cols[0]], c[cols[1]], c[cols[2]]);
    out[k] = (k % 2 == 0) ? Rational(-minor) : minor;
  }
  return out;
}

}  // namespace

Rational dot(const Vec4 &a, const Vec4 &b)
{
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

HPoint::HPoint(Vec4 coords) : coords_(std::move(coords))
{
  if (!normalize_leading(coords_)) {
    throw PreconditionError("degenerate point: all coordinates are zero");
  }
}

HPoint::HPoint(const Rational &x0, const Rational &x1, const Rational &x2, const Rational &x3)
    : HPoint(Vec4{x0, x1, x2, x3})
{
}

std::string HPoint::str() const { return "[" + join(coords_) + "]"; }

std::string PlaneKey::str() const { return join(covector_); }

PlaneKey canonical_plane(Vec4 raw)
{
  if (!normalize_leading(raw)) {
    throw PreconditionError("degenerate plane");
  }
  return PlaneKey(std::move(raw));
}

PlaneKey plane_through(const HPoint &p1, const HPoint &p2, const HPoint &p3)
{
  Vec4 cov = cofactor_covector(p1.coords(), p2.coords(), p3.coords());
  if (cov[0] == 0 && cov[1] == 0 && cov[2] == 0 && cov[3] == 0) {
    throw PreconditionError("degenerate triple: " + p1.str() + ", " + p2.str() + ", " + p3.str());
  }
  return canonical_plane(std::move(cov));
}

bool are_collinear(const HPoint &p1, const HPoint &p2, const HPoint &p3)
{
  const Vec4 cov = cofactor_covector(p1.coords(), p2.coords(), p3.coords());
  return cov[0] == 0 && cov[1] == 0 && cov[2] == 0 && cov[3] == 0;
}

Rational det4(const Vec4 &r0, const Vec4 &r1, const Vec4 &r2, const Vec4 &r3)
{
  // Laplace expansion along r3 against the cofactor covector of r0, r1, r2.
  return dot(cofactor_covector(r0, r1, r2), r3);
}

bool are_coplanar(const HPoint &p1, const HPoint &p2, const HPoint &p3, const HPoint &p4)
{
  return det4(p1.coords(), p2.coords(), p3.coords(), p4.coords()) == 0;
}

Projection project_from(const HPoint &center, const HPoint &q)
{
  if (center == q) {
    throw PreconditionError("cannot project the center " + center.str() + " from itself");
  }
  int axis = 0;
  while (center[axis] == 0) {
    ++axis;
  }
  // q - (q_k / c_k) c lies on x_k = 0 and on the line through center and q.
  const Rational ratio = q[axis] / center[axis];
  Projection out;
  out.dropped_axis = axis;
  int m = 0;
  for (int j = 0; j < 4; ++j) {
    if (j != axis) {
      out.homogeneous[m++] = q[j] - ratio * center[j];
    }
  }
  Vec3 affine_source = out.homogeneous;
  normalize_leading(out.homogeneous);
  if (affine_source[2] != 0) {
    out.affine = Point2{affine_source[0] / affine_source[2], affine_source[1] / affine_source[2]};
  }
  return out;
}

HPoint stereo_lift(const Point2 &pt)
{
  const Rational norm2 = pt.x * pt.x + pt.y * pt.y;
  return HPoint(2 * pt.x, 2 * pt.y, norm2 - 1, norm2 + 1);
}

HomogeneousSurface::HomogeneousSurface(int degree, std::map<Exponent, Rational> coefficients)
    : degree_(degree)
{
  if (degree < 1) {
    throw PreconditionError("surface degree must be positive");
  }
  for (auto &[exp, c] : coefficients) {
    if (exp[0] < 0 || exp[1] < 0 || exp[2] < 0 || exp[3] < 0 ||
        exp[0] + exp[1] + exp[2] + exp[3] != degree) {
      throw PreconditionError("monomial exponent does not match the surface degree");
    }
    if (c != 0) {
      coefficients_.emplace(exp, c);
    }
  }
  if (coefficients_.empty()) {
    throw PreconditionError("surface polynomial is identically zero");
  }
}

Rational HomogeneousSurface::evaluate(const Vec4 &x) const
{
  Rational total = 0;
  for (const auto &[exp, c] : coefficients_) {
    Rational term = c;
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < exp[i]; ++k) {
        term *= x[i];
      }
    }
    total += term;
  }
  return total;
}

std::map<HomogeneousSurface::Exponent, Rational>
HomogeneousSurface::derivative(const Exponent &orders) const
{
  std::map<Exponent, Rational> out;
  for (const auto &[exp, c] : coefficients_) {
    Rational coeff = c;
    Exponent reduced = exp;
    bool vanishes = false;
    for (int i = 0; i < 4 && !vanishes; ++i) {
      if (orders[i] > exp[i]) {
        vanishes = true;
        break;
      }
      for (int k = 0; k < orders[i]; ++k) {
        coeff *= exp[i] - k;
      }
      reduced[i] -= orders[i];
    }
    if (!vanishes) {
      out[reduced] += coeff;
    }
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

bool is_cone_vertex(const HomogeneousSurface &surface, const HPoint &z)
{
  if (surface.degree() < 2) {
    throw PreconditionError("cone vertex test needs degree >= 2");
  }
  const int order = surface.degree() - 1;
  // Every multi-index of total order degree-1.
  for (int a = 0; a <= order; ++a) {
    for (int b = 0; a + b <= order; ++b) {
      for (int c = 0; a + b + c <= order; ++c) {
        const int d = order - a - b - c;
        const auto linear = surface.derivative({a, b, c, d});
        Rational value = 0;
        for (const auto &[exp, coeff] : linear) {
          for (int i = 0; i < 4; ++i) {
            if (exp[i] == 1) {
              value += coeff * z[i];
            }
          }
        }
        if (value != 0) {
          return false;
        }
      }
    }
  }
  return true;
}

Rational concyclic_determinant(const Point2 &a, const Point2 &b, const Point2 &c, const Point2 &d)
{
  const auto row = [](const Point2 &p) {
    return Vec4{p.x * p.x + p.y * p.y, p.x, p.y, Rational(1)};
  };
  return det4(row(a), row(b), row(c), row(d));
}

Rational orientation(const Point2 &a, const Point2 &b, const Point2 &c)
{
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace qplanes
