#pragma once

// Incidence counts derived from plane histograms: ordinary planes, 4-point
// planes, coplanar quadruples, ordinary lines in the plane, ordinary circles.

#include "qplanes/configs.hpp"
#include "qplanes/histogram.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace qplanes {

struct CollinearityCheck {
  bool general_position = true;
  std::vector<CollinearTriple> violations;
};

// Exhaustive over all triples. Throws PreconditionError on repeated points.
CollinearityCheck no_three_collinear(std::span<const HPoint> points);

// Naive counter: for every triple, the number of points on its plane.
// O(n^4) rational arithmetic; used as a reference for small inputs.
using ReferenceHistogram = std::map<PlaneKey, std::size_t>;
ReferenceHistogram reference_histogram(std::span<const HPoint> points);

// Sorted member indices of every plane spanned by three points, planes sorted.
using MemberSets = std::vector<std::vector<int>>;

// Float backend: l lies on the plane of (i, j, k) iff float_coplanar holds.
MemberSets float_plane_members(std::span<const Float3> points, double epsilon);

// Combinatorial backend over the present members of a model.
MemberSets model_plane_members(const GroupConfig &config);

struct PlaneCounts {
  std::uint64_t ordinary_planes = 0;
  std::uint64_t four_point_planes = 0;
  std::uint64_t coplanar_quadruples = 0;
  std::uint32_t max_plane_size = 0;
  std::uint64_t triple_total = 0;

  friend bool operator==(const PlaneCounts &, const PlaneCounts &) = default;
};

PlaneCounts plane_counts(const PlaneHistogram &hist);
PlaneCounts plane_counts(const ReferenceHistogram &hist);
PlaneCounts plane_counts(const MemberSets &planes);

std::uint64_t ordinary_planes(std::span<const HPoint> points, unsigned jobs = 1);
std::uint64_t four_point_planes(std::span<const HPoint> points, unsigned jobs = 1);
std::uint64_t coplanar_quadruples(std::span<const HPoint> points, unsigned jobs = 1);

// Number of ordinary planes through each point.
std::vector<std::uint64_t> ordinary_planes_per_point(const PlaneHistogram &hist);

// Lines through exactly two of the points. Throws PreconditionError on repeats.
std::uint64_t ordinary_lines_2d(std::span<const Vec3> points);
std::uint64_t ordinary_lines_2d(std::span<const Point2> points);

// Ordinary lines of the projection of all other points from points[index].
std::uint64_t projected_ordinary_lines(std::span<const HPoint> points, std::size_t index);

struct CircleCounts {
  std::uint64_t circles3 = 0; // circles through exactly three points
  std::uint64_t lines3 = 0;   // lines through exactly three points

  friend bool operator==(const CircleCounts &, const CircleCounts &) = default;
};

// Counts through the stereographic lift: sphere planes avoiding the north
// pole are circles, planes through it are lines.
CircleCounts ordinary_circles(std::span<const Point2> points);

// The same counts by direct planar enumeration of triples, O(n^4).
CircleCounts planar_circle_counts(std::span<const Point2> points);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace qplanes
