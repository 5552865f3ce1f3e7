#include "qplanes/report.hpp"

#include "qplanes/errors.hpp"
#include "qplanes/group_count.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace qplanes {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Fnv {
public:
  void feed(std::uint64_t v)
  {
    for (int b = 0; b < 8; ++b) {
      h_ ^= (v >> (8 * b)) & 0xff;
      h_ *= 0x100000001b3ULL;
    }
  }
  std::string hex() const
  {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::string to_string(Backend backend)
{
  switch (backend) {
  case Backend::ExactGeometric:
    return "ExactGeometric";
  case Backend::GroupModel:
    return "GroupModel";
  case Backend::FloatGeometric:
    return "FloatGeometric";
  }
  return {};
}

std::string member_sets_digest(const MemberSets &planes)
{
  Fnv fnv;
  for (const auto &members : planes) {
    fnv.feed(members.size());
    for (int i : members) {
      fnv.feed(static_cast<std::uint64_t>(i));
    }
  }
  return fnv.hex();
}

std::string member_sets_csv(const MemberSets &planes)
{
  std::ostringstream os;
  os << "plane_key,count\n";
  for (const auto &members : planes) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      os << (i ? " " : "") << members[i];
    }
    os << ',' << members.size() << '\n';
  }
  return os.str();
}

CountReport count_exact(std::span<const HPoint> points, unsigned jobs, std::string *histogram)
{
  const auto start = Clock::now();
  const PlaneHistogram hist = plane_histogram(points, jobs);
  CountReport out;
  out.n = points.size();
  out.counts = plane_counts(hist);
  out.histogram_digest = hist.digest();
  out.runtime_ms = elapsed_ms(start);
  out.backend = Backend::ExactGeometric;
  if (histogram) {
    *histogram = hist.to_csv();
  }
  return out;
}

CountReport count_float(std::span<const Float3> points, double epsilon, std::string *histogram)
{
  const auto start = Clock::now();
  const MemberSets planes = float_plane_members(points, epsilon);
  CountReport out;
  out.n = points.size();
  out.counts = plane_counts(planes);
  out.histogram_digest = member_sets_digest(planes);
  out.runtime_ms = elapsed_ms(start);
  out.backend = Backend::FloatGeometric;
  out.epsilon = epsilon;
  if (histogram) {
    *histogram = member_sets_csv(planes);
  }
  return out;
}

CountReport count_model(const GroupConfig &config, std::string *histogram)
{
  const auto start = Clock::now();
  const MemberSets planes = model_plane_members(config);
  CountReport out;
  out.n = config.members().size();
  out.counts = plane_counts(planes);
  const std::uint64_t four_sum = group_four_sum_count(config);
  if (four_sum != out.counts.coplanar_quadruples) {
    throw VerificationError("model plane enumeration gives " +
                            std::to_string(out.counts.coplanar_quadruples) +
                            " coplanar quadruples, group counter gives " +
                            std::to_string(four_sum));
  }
  out.histogram_digest = member_sets_digest(planes);
  out.runtime_ms = elapsed_ms(start);
  out.backend = Backend::GroupModel;
  if (histogram) {
    *histogram = member_sets_csv(planes);
  }
  return out;
}

nlohmann::ordered_json to_json(const CountReport &report, bool stable)
{
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["ordinary_planes"] = report.counts.ordinary_planes;
  j["four_point_planes"] = report.counts.four_point_planes;
  j["coplanar_quadruples"] = report.counts.coplanar_quadruples;
  j["max_plane_size"] = report.counts.max_plane_size;
  j["histogram_digest"] = report.histogram_digest;
  j["runtime_ms"] = stable ? 0.0 : std::stod(format_double(report.runtime_ms));
  j["backend"] = to_string(report.backend);
  if (report.backend == Backend::FloatGeometric) {
    j["epsilon"] = std::stod(format_double(report.epsilon));
  } else {
    j["epsilon"] = nullptr;
  }
  return j;
}

}  // namespace qplanes
