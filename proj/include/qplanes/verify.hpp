#pragma once

// Seeded randomized verification suites over the exact algebra and counters.

#include <cstdint>
#include <string>
#include <vector>

namespace qplanes {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::size_t required = 0; // passes needed for ok()
  double seconds = 0.0;
  std::string detail;       // first failure, if any

  bool ok() const { return passed >= required; }
};

// coplanar, species, minors, sl2, identity, group, projection, circles.
const std::vector<std::string> &suite_names();

// Throws PreconditionError for an unknown suite; "all" runs every suite.
std::vector<SuiteResult> run_suite(const std::string &name, std::uint64_t seed = 1);

}  // namespace qplanes
