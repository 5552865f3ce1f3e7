#include "qplanes/counting.hpp"

#include "qplanes/errors.hpp"

#include <algorithm>

namespace qplanes {

namespace {

using i128 = __int128;

bool integer_collinear(const IntCovector &u, const IntCovector &v, const IntCovector &w)
{
  std::array<i128, 6> m{};
  int idx = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      m[idx++] = static_cast<i128>(u[i]) * v[j] - static_cast<i128>(u[j]) * v[i];
    }
  }
  // Minors indexed 01 02 03 12 13 23; every 3x3 minor of (u, v, w) must vanish.
  return m[3] * w[3] - m[4] * w[2] + m[5] * w[1] == 0 &&
         m[1] * w[3] - m[2] * w[2] + m[5] * w[0] == 0 &&
         m[0] * w[3] - m[2] * w[1] + m[4] * w[0] == 0 &&
         m[0] * w[2] - m[1] * w[1] + m[3] * w[0] == 0;
}

void reject_repeats(std::span<const HPoint> points)
{
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points[order[i]] == points[order[i - 1]]) {
      throw PreconditionError("repeated point " + points[order[i]].str() + " at indices " +
                              std::to_string(std::min(order[i], order[i - 1])) + " and " +
                              std::to_string(std::max(order[i], order[i - 1])));
    }
  }
}

Vec3 canonical3(Vec3 v)
{
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      const Rational lead = v[i];
      for (auto &x : v) {
        x /= lead;
      }
      break;
    }
  }
  return v;
}

Vec3 cross(const Vec3 &a, const Vec3 &b)
{
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3 &v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n) {
    return 0;
  }
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

CollinearityCheck no_three_collinear(std::span<const HPoint> points)
{
  reject_repeats(points);
  CollinearityCheck out;
  const std::size_t n = points.size();
  std::vector<IntCovector> ints;
  bool small = true;
  try {
    for (const auto &p : points) {
      ints.push_back(primitive_integer_vector(p));
    }
  } catch (const PreconditionError &) {
    small = false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const bool collinear = small ? integer_collinear(ints[i], ints[j], ints[k])
                                     : are_collinear(points[i], points[j], points[k]);
        if (collinear) {
          out.violations.push_back({i, j, k});
        }
      }
    }
  }
  out.general_position = out.violations.empty();
  return out;
}

ReferenceHistogram reference_histogram(std::span<const HPoint> points)
{
  ReferenceHistogram out;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        PlaneKey key = plane_through(points[i], points[j], points[k]);
        if (out.count(key)) {
          continue;
        }
        std::size_t count = 0;
        for (const auto &p : points) {
          count += key.contains(p) ? 1 : 0;
        }
        out.emplace(std::move(key), count);
      }
    }
  }
  return out;
}

MemberSets float_plane_members(std::span<const Float3> points, double epsilon)
{
  MemberSets out;
  const int n = static_cast<int>(points.size());
  std::vector<int> members;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        members.assign({i, j, k});
        bool first = true;
        for (int l = 0; l < n && first; ++l) {
          if (l == i || l == j || l == k) {
            continue;
          }
          if (float_coplanar(points[i], points[j], points[k], points[l], epsilon)) {
            if (l < k) {
              first = false;
            }
            members.push_back(l);
          }
        }
        if (first) {
          std::sort(members.begin(), members.end());
          out.push_back(members);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MemberSets model_plane_members(const GroupConfig &config)
{
  MemberSets out;
  const auto &m = config.members();
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = x + 1; y < m.size(); ++y) {
      for (std::size_t z = y + 1; z < m.size(); ++z) {
        auto members = config.plane_members(m[x], m[y], m[z]);
        if (members[0] == m[x] && members[1] == m[y] && members[2] == m[z]) {
          out.push_back(std::move(members));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlaneCounts plane_counts(const PlaneHistogram &hist)
{
  return {hist.ordinary_planes(), hist.four_point_planes(), hist.coplanar_quadruples(),
          hist.max_plane_size(), hist.triple_total()};
}

namespace {

template<typename Sizes>
PlaneCounts counts_from_sizes(const Sizes &sizes)
{
  PlaneCounts out;
  for (const std::uint64_t k : sizes) {
    out.ordinary_planes += k == 3 ? 1 : 0;
    out.four_point_planes += k == 4 ? 1 : 0;
    out.coplanar_quadruples += binomial(k, 4);
    out.triple_total += binomial(k, 3);
    out.max_plane_size = std::max<std::uint32_t>(out.max_plane_size, static_cast<std::uint32_t>(k));
  }
  return out;
}

}  // namespace

PlaneCounts plane_counts(const ReferenceHistogram &hist)
{
  std::vector<std::uint64_t> sizes;
  for (const auto &[key, k] : hist) {
    sizes.push_back(k);
  }
  return counts_from_sizes(sizes);
}

PlaneCounts plane_counts(const MemberSets &planes)
{
  std::vector<std::uint64_t> sizes;
  for (const auto &members : planes) {
    sizes.push_back(members.size());
  }
  return counts_from_sizes(sizes);
}

std::uint64_t ordinary_planes(std::span<const HPoint> points, unsigned jobs)
{
  return plane_histogram(points, jobs).ordinary_planes();
}

std::uint64_t four_point_planes(std::span<const HPoint> points, unsigned jobs)
{
  return plane_histogram(points, jobs).four_point_planes();
}

std::uint64_t coplanar_quadruples(std::span<const HPoint> points, unsigned jobs)
{
  return plane_histogram(points, jobs).coplanar_quadruples();
}

std::vector<std::uint64_t> ordinary_planes_per_point(const PlaneHistogram &hist)
{
  std::vector<std::uint64_t> out(hist.source_size(), 0);
  for (const auto &e : hist.entries()) {
    if (e.points != 3) {
      continue;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (hist.contains(e, i)) {
        ++out[i];
      }
    }
  }
  return out;
}

std::uint64_t ordinary_lines_2d(std::span<const Vec3> points)
{
  std::map<Vec3, std::uint64_t> pairs;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      Vec3 line = cross(points[i], points[j]);
      if (is_zero(line)) {
        throw PreconditionError("repeated point at indices " + std::to_string(i) + " and " +
                                std::to_string(j));
      }
      ++pairs[canonical3(std::move(line))];
    }
  }
  return static_cast<std::uint64_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const auto &kv) { return kv.second == 1; }));
}

std::uint64_t ordinary_lines_2d(std::span<const Point2> points)
{
  std::vector<Vec3> lifted;
  lifted.reserve(points.size());
  for (const auto &p : points) {
    lifted.push_back({p.x, p.y, Rational(1)});
  }
  return ordinary_lines_2d(std::span<const Vec3>(lifted));
}

std::uint64_t projected_ordinary_lines(std::span<const HPoint> points, std::size_t index)
{
  std::vector<Vec3> images;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != index) {
      images.push_back(project_from(points[index], points[i]).homogeneous);
    }
  }
  return ordinary_lines_2d(std::span<const Vec3>(images));
}

CircleCounts ordinary_circles(std::span<const Point2> points)
{
  std::vector<Point2> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("repeated planar point");
  }
  std::vector<HPoint> lifted;
  lifted.reserve(points.size());
  for (const auto &p : points) {
    lifted.push_back(stereo_lift(p));
  }
  const PlaneHistogram hist = plane_histogram(lifted);
  CircleCounts out;
  for (const auto &e : hist.entries()) {
    if (e.points != 3) {
      continue;
    }
    const bool through_pole = e.key[2] + e.key[3] == 0;
    ++(through_pole ? out.lines3 : out.circles3);
  }
  return out;
}

}  // namespace qplanes

namespace qplanes {

CircleCounts planar_circle_counts(std::span<const Point2> points)
{
  const std::size_t n = points.size();
  CircleCounts out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const bool collinear = orientation(points[i], points[j], points[k]) == 0;
        std::size_t on = 3;
        bool smallest = true;
        for (std::size_t l = 0; l < n && smallest; ++l) {
          if (l == i || l == j || l == k) {
            continue;
          }
          const bool incident = collinear
                                    ? orientation(points[i], points[j], points[l]) == 0
                                    : concyclic_determinant(points[i], points[j], points[k],
                                                            points[l]) == 0;
          if (incident) {
            ++on;
            smallest = l > k;
          }
        }
        if (smallest && on == 3) {
          ++(collinear ? out.lines3 : out.circles3);
        }
      }
    }
  }
  return out;
}

}  // namespace qplanes
