#pragma once

#include <cstdint>
#include <random>

namespace qplanes {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]. mt19937_64 output is fixed by the standard;
// the reduction below keeps results identical across standard libraries.
inline long draw_int(Rng &rng, long lo, long hi)
{
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

}  // namespace qplanes
