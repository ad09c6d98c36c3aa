#pragma once

#include "huslab/norms.hpp"

#include <cstdint>

namespace huslab {

/// Seeded random real polynomial of the given degree: monomial coefficients
/// uniform in [-1,1], rescaled to unit interval sup norm (float scalars).
MonomialPoly random_unit_norm_poly(int degree, std::uint64_t seed,
                                   std::uint64_t trial);

struct BoundCheckResult {
  int degree = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  /// Max over trials of max_k |c_k| / (d_{m,k} * ||p||); must be <= 1 + 1e-9.
  double max_ratio = 0.0;
  /// Ratio attained by the Chebyshev witness; the bound is sharp there.
  double chebyshev_ratio = 0.0;
  /// Witness coefficients match d_{m,k} exactly and its norm is 1 within 1e-10.
  bool chebyshev_equality = false;
  bool bound_holds = false;

  bool passed() const { return bound_holds && chebyshev_equality; }
};

/// Coefficient-bound suite: checks |c_k| <= d_{m,k} ||p|| over seeded random
/// polynomials and verifies the equality case on the Chebyshev witness.
BoundCheckResult run_bound_check(int degree, int trials, std::uint64_t seed);

} // namespace huslab
