#pragma once

// Group parametrizations of first-species rational quartics: coplanarity
// becomes a product rule (nodal) or a sum rule (cuspidal) on mapped parameters.

#include "qplanes/sylvester.hpp"

namespace qplanes {

enum class GroupKind { NodalProduct, CuspidalSum };

struct GroupModelQuartic {
  GroupKind kind;

  // NodalProduct: t -> (a1 t + b1) / (a2 t + b2); four points are coplanar iff
  // the mapped values multiply to 1. `fourth_root` is the primitive 4th root of
  // -1 absorbed into (a1, b1) to turn the product -1 into 1.
  std::array<Complex, 4> moebius{};
  Complex fourth_root{};

  // CuspidalSum: s(t) = (sa t + sb) / (sc t + sd), phi(s) = c/4 - d/s;
  // four points are coplanar iff the phi values sum to 0.
  std::array<Complex, 4> s_map{};
  Complex c{};
  Complex d{};

  // Group element of the curve point with parameter t.
  Complex element(Complex t) const;
  // Preimage of a group element.
  Complex parameter(Complex element) const;

  // |prod - 1| (nodal) or |sum| / max(1, sum of |phi|) (cuspidal).
  double rule_residual(const std::array<Complex, 4> &ts) const;
};

struct GroupModelOptions {
  SylvesterOptions sylvester;
  std::size_t verification_samples = 100;
  double rule_tolerance = 1e-8;
  std::uint64_t seed = 0x5eed;
};

// Throws PreconditionError for second-species curves or a fundamental quartic
// that is a single fourth power, VerificationError when the sampled check fails.
GroupModelQuartic group_parametrization(const QuarticCurve &curve,
                                        const GroupModelOptions &options = {});

// Evaluates the coplanarity form at complex parameters.
Complex coplanarity_form(const QuarticCurve &curve, const std::array<Complex, 4> &ts);

}  // namespace qplanes
