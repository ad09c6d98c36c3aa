#pragma once

#include "huslab/polynomial.hpp"

namespace huslab {

struct IntervalNormResult {
  double value = 0.0;
  double at = 0.0; // abscissa in [0,1] where the maximum is attained
};

struct DiskNormResult {
  double value = 0.0;
  double angle = 0.0; // boundary angle where the maximum is attained
};

/// max_{x in [0,1]} |p(x)| for real-coefficient polynomials.
/// Chebyshev-spaced 4097-point grid, then golden-section refinement of each
/// local maximum to 1e-12 abscissa tolerance. Throws on complex coefficients
/// (imaginary parts above 1e-14).
IntervalNormResult sup_norm_interval(const MonomialPoly& p);
IntervalNormResult sup_norm_interval(const BernsteinPoly& p);

/// max_{|z| <= R} |p(z)|, reduced to the boundary circle by the maximum
/// modulus principle: 8192 uniform angles plus golden-section refinement.
DiskNormResult sup_norm_disk(const MonomialPoly& p, DiskDomain d);
DiskNormResult sup_norm_disk(const BernsteinPoly& p, DiskDomain d);

} // namespace huslab
