#pragma once

// Count reports for the three counting backends, serialized as flat JSON.

#include "qplanes/counting.hpp"

#include "json.hpp"

#include <string>

namespace qplanes {

enum class Backend { ExactGeometric, GroupModel, FloatGeometric };

std::string to_string(Backend backend);

struct CountReport {
  std::size_t n = 0;
  PlaneCounts counts;
  std::string histogram_digest;
  double runtime_ms = 0.0;
  Backend backend = Backend::ExactGeometric;
  double epsilon = 0.0; // FloatGeometric only
};

// `histogram` receives the plane_key,count table when non-null.
CountReport count_exact(std::span<const HPoint> points, unsigned jobs = 1,
                        std::string *histogram = nullptr);
CountReport count_float(std::span<const Float3> points, double epsilon,
                        std::string *histogram = nullptr);
// Also checks coplanar_quadruples against group_four_sum_count.
CountReport count_model(const GroupConfig &config, std::string *histogram = nullptr);

// FNV-1a over the sorted member sets, 16 hex digits.
std::string member_sets_digest(const MemberSets &planes);
std::string member_sets_csv(const MemberSets &planes);

// Field order is fixed. `stable` writes runtime_ms as 0.
nlohmann::ordered_json to_json(const CountReport &report, bool stable = false);

}  // namespace qplanes
