#pragma once

// Exact projective geometry in FP^3 over the rationals.

#include "qplanes/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qplanes {

using Vec4 = std::array<Rational, 4>;
using Vec3 = std::array<Rational, 3>;

Rational dot(const Vec4 &a, const Vec4 &b);

// Projective point stored with its first nonzero coordinate equal to 1, so
// equal points compare equal component-wise.
class HPoint {
public:
  // Throws PreconditionError when all coordinates vanish.
  explicit HPoint(Vec4 coords);
  HPoint(const Rational &x0, const Rational &x1, const Rational &x2, const Rational &x3);

  const Vec4 &coords() const { return coords_; }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const HPoint &, const HPoint &) = default;
  friend bool operator<(const HPoint &a, const HPoint &b) { return a.coords_ < b.coords_; }

  std::string str() const;

private:
  Vec4 coords_;
};

// Canonical covector of a plane: first nonzero entry equals 1.
class PlaneKey {
public:
  const Vec4 &covector() const { return covector_; }
  const Rational &operator[](std::size_t i) const { return covector_[i]; }

  bool contains(const HPoint &p) const { return dot(covector_, p.coords()) == 0; }

  friend bool operator==(const PlaneKey &, const PlaneKey &) = default;
  friend bool operator<(const PlaneKey &a, const PlaneKey &b) { return a.covector_ < b.covector_; }

  std::string str() const;

private:
  friend PlaneKey canonical_plane(Vec4 raw);
  explicit PlaneKey(Vec4 v) : covector_(std::move(v)) {}
  Vec4 covector_;
};

struct PlaneKeyHash {
  std::size_t operator()(const PlaneKey &k) const { return hash_range(k.covector()); }
};

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2 &, const Point2 &) = default;
  friend auto operator<=>(const Point2 &a, const Point2 &b)
  {
    if (auto c = cmp(a.x, b.x); c != 0) {
      return c <=> 0;
    }
    return cmp(a.y, b.y) <=> 0;
  }
};

// Image of a point under projection from a center. The target plane is
// x_k = 0 for the first k with center[k] != 0; `dropped_axis` records k.
// `homogeneous` holds the remaining three coordinates (first nonzero = 1);
// `affine` dehomogenizes by the last of them when it is nonzero.
struct Projection {
  int dropped_axis = 0;
  Vec3 homogeneous;
  std::optional<Point2> affine;
};

// Homogeneous polynomial in x0..x3 of a fixed degree.
class HomogeneousSurface {
public:
  using Exponent = std::array<int, 4>;

  HomogeneousSurface(int degree, std::map<Exponent, Rational> coefficients);

  int degree() const { return degree_; }
  const std::map<Exponent, Rational> &coefficients() const { return coefficients_; }

  Rational evaluate(const Vec4 &x) const;
  // Partial derivative by the multi-index `orders`; result has degree - |orders|.
  std::map<Exponent, Rational> derivative(const Exponent &orders) const;

private:
  int degree_;
  std::map<Exponent, Rational> coefficients_;
};

PlaneKey canonical_plane(Vec4 raw);

// Throws PreconditionError("degenerate triple") when the points are collinear
// or coincide.
PlaneKey plane_through(const HPoint &p1, const HPoint &p2, const HPoint &p3);

bool are_collinear(const HPoint &p1, const HPoint &p2, const HPoint &p3);
bool are_coplanar(const HPoint &p1, const HPoint &p2, const HPoint &p3, const HPoint &p4);

Rational det4(const Vec4 &r0, const Vec4 &r1, const Vec4 &r2, const Vec4 &r3);

// Throws PreconditionError when q == center.
Projection project_from(const HPoint &center, const HPoint &q);

// (x, y) -> [2x, 2y, x^2+y^2-1, x^2+y^2+1], a point of the unit sphere
// x0^2 + x1^2 + x2^2 = x3^2.
HPoint stereo_lift(const Point2 &pt);

inline const HPoint &north_pole()
{
  static const HPoint pole(0, 0, 1, 1);
  return pole;
}

// True iff every partial derivative of order degree-1 vanishes at z.
bool is_cone_vertex(const HomogeneousSurface &surface, const HPoint &z);

// Zero iff the four planar points are concyclic or collinear.
Rational concyclic_determinant(const Point2 &a, const Point2 &b, const Point2 &c, const Point2 &d);

// Zero iff the three planar points are collinear.
Rational orientation(const Point2 &a, const Point2 &b, const Point2 &c);

}  // namespace qplanes
