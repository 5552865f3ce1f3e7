#pragma once

// Counting on combinatorial group models and parametrized curve point sets,
// and the closed-form maximum number of 4-point planes.

#include "qplanes/configs.hpp"

#include <cstdint>
#include <span>

namespace qplanes {

// 4-subsets of present members satisfying the coplanarity predicate. Subset-sum
// dynamic programming for Cyclic and TwoComponent, enumeration for CirclePair.
std::uint64_t group_four_sum_count(const GroupConfig &config);

// Plain enumeration of all 4-subsets.
std::uint64_t group_four_sum_count_exhaustive(const GroupConfig &config);

// 3-subsets of members spanning a plane with no further member.
std::uint64_t group_ordinary_count(const GroupConfig &config);

// Piecewise cubic in n by residue mod 8. Throws PreconditionError for n < 8
// and VerificationError if the value is not an integer.
std::uint64_t formula_max_4pt(long n);

struct Max4ptResult {
  std::uint64_t count;
  GroupConfig witness;
};

// Best group_four_sum_count over all Cyclic offsets and all TwoComponent
// (offset, parity) pairs; the first maximizer in that order is the witness.
Max4ptResult max_4pt_search(int n);

// 4-subsets of distinct values summing to zero.
std::uint64_t zero_sum_quadruples(std::span<const long> values);

// Coplanar quadruples of the curve points at the given distinct parameters,
// using solve_t4 for every triple.
std::uint64_t curve_coplanar_quadruples(const QuarticCurve &curve,
                                        std::span<const Rational> parameters);

// Complex variant: the fourth parameter is matched to the nearest given
// parameter within `tolerance` (relative).
std::uint64_t curve_coplanar_quadruples(const QuarticCurve &curve,
                                        std::span<const Complex> parameters,
                                        double tolerance = 1e-8);

}  // namespace qplanes
