#include "doctest.h"
#include "oracles.hpp"

#include "qplanes/configs.hpp"
#include "qplanes/counting.hpp"
#include "qplanes/errors.hpp"
#include "qplanes/group_count.hpp"

using namespace qplanes;

namespace {

// All 4-subsets of the float points that are coplanar within epsilon.
std::set<std::array<int, 4>> float_quadruples(const std::vector<Float3> &pts, double eps)
{
  std::set<std::array<int, 4>> out;
  const int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (float_coplanar(pts[a], pts[b], pts[c], pts[d], eps)) {
            out.insert({a, b, c, d});
          }
  return out;
}

std::set<std::array<int, 4>> model_quadruples(const GroupConfig &g)
{
  std::set<std::array<int, 4>> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.coplanar(a, b, c, d)) {
            out.insert({a, b, c, d});
          }
  return out;
}

}  // namespace

TEST_CASE("prism and antiprism geometry")
{
  const TwinConfig cube = prism(4);
  CHECK(cube.geometry.approx.size() == 8);
  CHECK(cube.model.order() == 8);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k) {
        const auto &a = cube.geometry.approx[i], &b = cube.geometry.approx[j], &c = cube.geometry.approx[k];
        const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
        const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
        const double cross = std::abs(u[1] * v[2] - u[2] * v[1]) + std::abs(u[2] * v[0] - u[0] * v[2]) +
                             std::abs(u[0] * v[1] - u[1] * v[0]);
        CHECK(cross > 1e-9);
      }

  const TwinConfig tri = prism(3);
  const MemberSets planes = float_plane_members(tri.geometry.approx, 1e-9);
  CHECK(std::count(planes.begin(), planes.end(), std::vector<int>{0, 1, 2}) == 1);
  CHECK(std::count(planes.begin(), planes.end(), std::vector<int>{3, 4, 5}) == 1);

  const GroupConfig hex = prism(6).model;
  CHECK(hex.coplanar(0, 2, 6 + 0, 6 + 2));
  CHECK_FALSE(hex.coplanar(0, 2, 6 + 0, 6 + 3));

  CHECK_THROWS_AS(prism(2), PreconditionError);
  CHECK_THROWS_AS(antiprism(2), PreconditionError);
}

TEST_CASE("circle-pair predicates match float geometry")
{
  for (int m = 3; m <= 8; ++m) {
    for (const bool anti : {false, true}) {
      const TwinConfig twin = anti ? antiprism(m) : prism(m);
      CAPTURE(m);
      CAPTURE(anti);
      CHECK(float_quadruples(twin.geometry.approx, 1e-9) == model_quadruples(twin.model));
      CHECK(float_plane_members(twin.geometry.approx, 1e-9) == model_plane_members(twin.model));
    }
  }
  // Antiprism(3) is an octahedron: the 2+2 classes are its three squares.
  const TwinConfig octa = antiprism(3);
  int two_two = 0;
  for (const auto &q : model_quadruples(octa.model)) {
    two_two += (q[1] < 3) && (q[2] >= 3);
  }
  CHECK(two_two == 3);
}

TEST_CASE("cyclic and two-component predicates")
{
  const GroupConfig c8 = coset_cyclic(8, 0);
  CHECK(c8.coplanar(0, 1, 3, 4));
  CHECK_FALSE(c8.coplanar(0, 1, 2, 3));
  CHECK(group_four_sum_count(c8) == oracle::cyclic_four_sums(8, 0));
  CHECK(group_four_sum_count(coset_cyclic(5, 0)) == oracle::cyclic_four_sums(5, 0));
  CHECK(coset_cyclic(5, 0).coplanar(1, 2, 3, 4));

  const GroupConfig t8 = coset_two_component(8, 0, 0);
  const auto idx = [](int j, int e) { return j + 4 * e; };
  CHECK_FALSE(t8.coplanar(idx(0, 0), idx(1, 0), idx(3, 0), idx(0, 1)));
  CHECK(t8.coplanar(idx(0, 0), idx(1, 1), idx(2, 1), idx(1, 0)));
  CHECK(t8.decode(idx(3, 1)) == std::pair{3, 1});
  CHECK_THROWS_AS(coset_two_component(9, 0, 0), PreconditionError);
  CHECK_THROWS_AS(coset_two_component(6, 0, 0), PreconditionError);

  // Symmetry of every predicate in its arguments.
  for (const GroupConfig &g : {coset_cyclic(9, 4), coset_two_component(10, 3, 1), prism(5).model,
                               antiprism(5).model}) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            const bool x = g.coplanar(a, b, c, d);
            CHECK(x == g.coplanar(d, c, b, a));
            CHECK(x == g.coplanar(b, d, a, c));
          }
  }
  // x -> 3x is an automorphism of Z_8 fixing the offset 0.
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d)
          CHECK(c8.coplanar(a, b, c, d) == c8.coplanar(3 * a % 8, 3 * b % 8, 3 * c % 8, 3 * d % 8));
}

TEST_CASE("nodal roots of unity")
{
  const GroupConfig g5 = nodal_roots_config(QuarticCurve(1, 0, 0, 0), 5).model;
  CHECK_FALSE(g5.coplanar(0, 1, 2, 3));
  CHECK(g5.coplanar(1, 2, 3, 4));

  const NodalRootsConfig cfg8 = nodal_roots_config(QuarticCurve(1, 0, 0, 0), 8);
  CHECK(group_four_sum_count(cfg8.model) == oracle::cyclic_four_sums(8, 0));

  // |F| at the complex parameters vanishes exactly on model-coplanar quadruples.
  const QuarticCurve nodal(1, 0, 0, 0);
  const NodalRootsConfig cfg = nodal_roots_config(nodal, 12);
  const auto &t = cfg.parameters;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = b + 1; c < 12; ++c)
        for (int d = c + 1; d < 12; ++d) {
          const double f = std::abs(coplanarity_form(nodal, {t[a], t[b], t[c], t[d]}));
          if (cfg.model.coplanar(a, b, c, d)) {
            CHECK(f < 1e-8);
          } else {
            CHECK(f > 1e-6);
          }
        }
  CHECK_THROWS_AS(nodal_roots_config(QuarticCurve(0, 0, 0, 1), 8), PreconditionError);
}

TEST_CASE("cuspidal integers")
{
  CHECK(integers_closest_to_zero(5) == std::vector<long>{-2, -1, 0, 1, 2});
  CHECK(integers_closest_to_zero(4) == std::vector<long>{-1, 0, 1, 2});
  const CuspIntegersConfig cfg = cuspidal_integers_config(5);
  const QuarticCurve &c = cfg.curve;
  const auto &t = cfg.parameters;
  // phi values -2 -1 0 1 2 at indices 0..4.
  CHECK(coplanarity_form(c, t[0], t[1], t[3], t[4]) == 0);
  CHECK(coplanarity_form(c, t[0], t[1], t[2], t[3]) != 0);
  for (int n : {8, 13, 20}) {
    const CuspIntegersConfig big = cuspidal_integers_config(n);
    CHECK(curve_coplanar_quadruples(big.curve, big.parameters) ==
          static_cast<std::uint64_t>(oracle::zero_sums(big.phi_values)));
  }
}

TEST_CASE("random rational sets")
{
  const GeomConfig a = random_rational_config(30, 7, 1000);
  const GeomConfig b = random_rational_config(30, 7, 1000);
  CHECK(a.exact == b.exact);
  CHECK(a.exact != random_rational_config(30, 8, 1000).exact);
  CHECK(no_three_collinear(random_rational_config(50, 3, 1000).exact).general_position);
  CHECK_THROWS_AS(random_rational_config(60, 1, 1), PreconditionError);

  const GeomConfig twenty = random_rational_config(20, 1, 1000);
  std::vector<oracle::P4> raw;
  for (const auto &p : twenty.exact) {
    raw.push_back(p.coords());
  }
  const auto oc = oracle::counts(oracle::plane_member_sets(raw));
  CHECK(plane_counts(reference_histogram(twenty.exact)).ordinary_planes ==
        static_cast<std::uint64_t>(oc.ordinary));
  CHECK(ordinary_planes(twenty.exact) == static_cast<std::uint64_t>(oc.ordinary));
}

TEST_CASE("outlier injection")
{
  const GeomConfig base = random_rational_config(12, 5, 100);
  CHECK(inject_outliers(base, 0, 1, OutlierMode::Remove).exact == base.exact);
  CHECK_THROWS_AS(inject_outliers(base, 13, 1, OutlierMode::Remove), PreconditionError);
  const GeomConfig removed = inject_outliers(base, 3, 1, OutlierMode::Remove);
  CHECK(removed.exact.size() == 9);
  CHECK(removed.edits.size() == 3);

  // Removing one element drops exactly the quadruples through it.
  const GroupConfig g = coset_cyclic(16, 3);
  std::vector<OutlierEdit> edits;
  const GroupConfig less = inject_outliers(g, 1, 9, &edits);
  REQUIRE(edits.size() == 1);
  const int gone = static_cast<int>(edits[0].index);
  std::uint64_t through = 0;
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      for (int c = b + 1; c < 16; ++c)
        if (a != gone && b != gone && c != gone && g.coplanar(a, b, c, gone)) {
          ++through;
        }
  CHECK(group_four_sum_count(less) == group_four_sum_count(g) - through);

  // A planar set (points of a conic in the plane x3 = 0) plus k outliers.
  for (const int k : {1, 2, 3}) {
    GeomConfig planar;
    for (int i = 0; i < 9; ++i) {
      planar.exact.emplace_back(Rational(1), Rational(i), Rational(i * i), Rational(0));
    }
    const GeomConfig mixed = inject_outliers(planar, k, 40 + k, OutlierMode::Append, 50);
    const long n = static_cast<long>(mixed.exact.size());
    const long bound = k * (oracle::choose(n - k, 2) - k + 1);
    CHECK(static_cast<long>(ordinary_planes(mixed.exact)) >= bound);
  }
}

TEST_CASE("family descriptors")
{
  CHECK(parse_family("coset:16:0").args == std::vector<long>{16, 0});
  CHECK(parse_family("random:30:7:1000").name == "random");
  CHECK_THROWS_AS(parse_family("coset:16"), PreconditionError);
  CHECK_THROWS_AS(parse_family("torus:3"), PreconditionError);
  CHECK_THROWS_AS(parse_family("prism:x"), PreconditionError);
}
