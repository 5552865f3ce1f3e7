#pragma once

// Generators for the extremal configuration families: prisms, antiprisms,
// coset models on group quartics, random general-position sets, outliers.

#include "qplanes/group_model.hpp"
#include "qplanes/pointset_io.hpp"
#include "qplanes/quartic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qplanes {

enum class ModelKind { Cyclic, TwoComponent, CirclePair };
enum class CircleAlignment { Aligned, Offset };

// Combinatorial model of a coset configuration. Elements are indices
// 0..order-1; `members` is the subset actually present (all of them unless
// points were removed).
//   Cyclic:       Z_n, {a,b,c,d} coplanar iff a+b+c+d = offset (mod n).
//   TwoComponent: i = j + eps*(n/2) with j in Z_{n/2}, eps in Z_2; coplanar iff
//                 sum j = offset (mod n/2) and sum eps = parity (mod 2).
//   CirclePair:   i = k + eps*m, eps = 0 top circle, 1 bottom circle; coplanar
//                 iff all four share a circle, or two lie on each circle with
//                 a+b = c+d (+1 when Offset) (mod m) for top a,b and bottom c,d.
class GroupConfig {
public:
  static GroupConfig cyclic(int n, int offset);
  static GroupConfig two_component(int n, int offset, int parity);
  static GroupConfig circle_pair(int m, CircleAlignment alignment);

  ModelKind kind() const { return kind_; }
  int order() const { return order_; }
  int offset() const { return offset_; }
  int parity() const { return parity_; }
  CircleAlignment alignment() const { return alignment_; }
  const std::vector<int> &members() const { return members_; }
  bool is_member(int i) const { return present_[i]; }

  // (group coordinate, component) of an element; component is 0 for Cyclic.
  std::pair<int, int> decode(int i) const;

  // Distinct elements required.
  bool coplanar(int a, int b, int c, int d) const;

  // The unique element completing a coplanar quadruple with a, b, c (possibly
  // one of them, i.e. a tangency), or nullopt when it is not unique.
  std::optional<int> fourth(int a, int b, int c) const;

  // Members lying on the plane spanned by three distinct members.
  std::vector<int> plane_members(int a, int b, int c) const;

  void remove_member(int i);

  std::string descriptor() const;

private:
  GroupConfig(ModelKind kind, int order, int offset, int parity, CircleAlignment alignment);

  ModelKind kind_;
  int order_;
  int offset_;
  int parity_;
  CircleAlignment alignment_;
  std::vector<int> members_;
  std::vector<bool> present_;
};

struct OutlierEdit {
  enum class Kind { Removed, Appended } kind;
  std::size_t index; // position in the input (Removed) or output (Appended)
  std::optional<HPoint> point;
};

// Exact points or float 3-vectors, with provenance.
struct GeomConfig {
  std::vector<HPoint> exact;
  std::vector<Float3> approx;
  bool is_exact = true;
  std::string family;
  std::uint64_t seed = 0;
  double epsilon = 1e-9;
  std::vector<OutlierEdit> edits;

  std::size_t size() const { return is_exact ? exact.size() : approx.size(); }
};

struct TwinConfig {
  GeomConfig geometry;
  GroupConfig model;
};

TwinConfig prism(int m);
TwinConfig antiprism(int m);

GroupConfig coset_cyclic(int n, int offset);
GroupConfig coset_two_component(int n, int offset, int parity);

struct NodalRootsConfig {
  GroupConfig model;
  GroupModelQuartic group;
  // Curve parameters whose group elements are the n-th roots of unity, in
  // exponent order.
  std::vector<Complex> parameters;
};

NodalRootsConfig nodal_roots_config(const QuarticCurve &curve, int n);

// The cuspidal curve t^4 + 4 t^3 (p = q = r = 0, s = 1): four points are
// coplanar iff phi(t) = 1/4 + 1/t sums to zero. The n parameters have the
// n integers closest to 0 as phi values (ties broken towards +).
struct CuspIntegersConfig {
  QuarticCurve curve;
  std::vector<long> phi_values;
  std::vector<Rational> parameters;
};

QuarticCurve cuspidal_reference_curve();
CuspIntegersConfig cuspidal_integers_config(int n);

// The n integers closest to 0, ascending.
std::vector<long> integers_closest_to_zero(int n);

GeomConfig random_rational_config(int n, std::uint64_t seed, long coordinate_bound);

enum class OutlierMode { Remove, Append };

GeomConfig inject_outliers(const GeomConfig &base, std::size_t k, std::uint64_t seed,
                           OutlierMode mode, long coordinate_bound = 1000);
GroupConfig inject_outliers(const GroupConfig &base, std::size_t k, std::uint64_t seed,
                            std::vector<OutlierEdit> *edits = nullptr);

// True iff the float points are coplanar: |det| < epsilon with rows (x, y, z, 1).
bool float_coplanar(const Float3 &a, const Float3 &b, const Float3 &c, const Float3 &d,
                    double epsilon);

// "prism:m", "antiprism:m", "coset:n:c0", "coset2:n:c0:parity", "nodal-roots:n",
// "cusp-ints:n", "random:n:seed:bound".
struct FamilyDescriptor {
  std::string name;
  std::vector<long> args;
  std::string text;
};

FamilyDescriptor parse_family(const std::string &text);

}  // namespace qplanes
