#pragma once

// Canonical forms of binary quartics with vanishing catalecticant, computed
// through the apolar quadratic in complex floating point.

#include "qplanes/quartic.hpp"

#include <complex>
#include <vector>

namespace qplanes {

using Complex = std::complex<double>;

// a l + b m
struct LinearForm {
  Complex a;
  Complex b;
};

enum class CanonicalKind {
  FourthPower,    // (a l + b m)^4
  PowerSum,       // (a1 l + b1 m)^4 + (a2 l + b2 m)^4
  LinearTimesCube // (a1 l + b1 m)(a2 l + b2 m)^3
};

struct CanonicalForm {
  CanonicalKind kind;
  // One form for FourthPower, two otherwise (l1 then l2).
  std::vector<LinearForm> forms;
  // Max coefficient error of the reconstruction relative to the input's
  // largest coefficient.
  double residual = 0.0;

  // Coefficients c0..c4 in the basis c0 l^4 + 4 c1 l^3 m + 6 c2 l^2 m^2 + ...
  std::array<Complex, 5> reconstruct() const;
};

struct SylvesterOptions {
  double residual_tolerance = 1e-9;
  // Singular values below rank_tolerance * sigma_max count as zero.
  double rank_tolerance = 1e-12;
  // sigma_2 / sigma_max inside [rank_tolerance, ambiguity_ceiling] is rejected.
  double ambiguity_ceiling = 1e-6;
  // Relative discriminant below which the apolar quadratic has a double root.
  double double_root_tolerance = 1e-10;
};

// Throws PreconditionError when the catalecticant is nonzero and
// VerificationError when the kernel rank is numerically ambiguous or the
// reconstruction misses the residual tolerance.
CanonicalForm sylvester_decompose(const BinaryQuartic &bq, const SylvesterOptions &options = {});

// Same, for complex coefficients; the catalecticant test is |cat| < tolerance
// relative to the coefficient scale.
CanonicalForm sylvester_decompose(const std::array<Complex, 5> &coeffs,
                                  const SylvesterOptions &options = {});

std::array<Complex, 5> to_complex(const BinaryQuartic &bq);

}  // namespace qplanes
