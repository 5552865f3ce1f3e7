#pragma once

// Command implementations behind the qplanes executable. Each command writes
// its result to `out` (or to spec.out when set) and diagnostics to `err`, and
// returns the process exit code.

#include "qplanes/configs.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qplanes {

enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitPrecondition = 2, kExitVerification = 3 };

struct RunSpec {
  std::string command; // generate count classify decompose verify max4pt growth
  std::string family;  // descriptor ("coset:16:0") or bare name filled from flags
  std::string in;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string n;       // single value, "a..b" range or comma list
  std::optional<long> offset;
  std::optional<int> parity;
  std::optional<long> bound;
  double epsilon = 1e-9;
  unsigned jobs = 1;
  std::string format = "json";
  std::string suite = "all";
  std::string metric;  // growth: ordinary, four-point, quadruples
  std::string backend; // count: exact, model, float
  bool stable = false;
};

int run_command(const RunSpec &spec, std::ostream &out, std::ostream &err);

// "8..12" -> 8 9 10 11 12, "32,64" -> 32 64, "7" -> 7.
std::vector<long> parse_n_list(const std::string &text);

// Descriptor with every argument present, filling bare names from the flags.
FamilyDescriptor resolve_family(const RunSpec &spec);

nlohmann::ordered_json model_to_json(const GroupConfig &config);
GroupConfig model_from_json(const nlohmann::json &j);

// The nodal curve with fundamental quartic l^4 + m^4.
QuarticCurve nodal_reference_curve();

}  // namespace qplanes
