#include "huslab/bound_check.hpp"

#include "huslab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace huslab {

MonomialPoly random_unit_norm_poly(int degree, std::uint64_t seed,
                                   std::uint64_t trial) {
  if (degree < 0)
    throw std::invalid_argument("random_unit_norm_poly: negative degree");
  Rng rng = trial_rng(seed, 1000 + static_cast<std::uint64_t>(degree), trial);
  std::vector<Scalar> coeffs(degree + 1);
  while (true) {
    for (auto& c : coeffs)
      c = Scalar(rng.uniform(-1.0, 1.0));
    MonomialPoly p(coeffs);
    const double norm = sup_norm_interval(p).value;
    if (norm > 0.0) {
      for (auto& c : p.coeffs)
        c = Scalar(c.real() / norm);
      return p;
    }
  }
}

BoundCheckResult run_bound_check(int degree, int trials, std::uint64_t seed) {
  if (degree < 1)
    throw std::invalid_argument("run_bound_check: degree must be >= 1");
  if (trials < 1)
    throw std::invalid_argument("run_bound_check: trials must be >= 1");

  std::vector<double> d(degree + 1);
  for (int k = 0; k <= degree; ++k)
    d[k] = static_cast<double>(d_coeff_closed(degree, k));

  BoundCheckResult result;
  result.degree = degree;
  result.trials = trials;
  result.seed = seed;

  for (int t = 0; t < trials; ++t) {
    const MonomialPoly p = random_unit_norm_poly(degree, seed, t);
    const BernsteinPoly b = to_bernstein(p, degree);
    for (int k = 0; k <= degree; ++k) {
      const double ratio = b.coeffs[k].abs() / d[k];
      if (ratio > result.max_ratio)
        result.max_ratio = ratio;
    }
  }

  // Equality case: push the Chebyshev witness through the conversion pair
  // and require the coefficient magnitudes back exactly.
  const BernsteinPoly direct = chebyshev_bernstein(degree);
  const BernsteinPoly round_trip = to_bernstein(from_bernstein(direct), degree);
  bool coeffs_exact = true;
  for (int k = 0; k <= degree; ++k) {
    const BigRational expected(d_coeff_closed(degree, k));
    const RationalComplex& got = round_trip.coeffs[k].exact_value();
    if (got.im != 0 || abs(got.re) != expected) {
      coeffs_exact = false;
      break;
    }
  }
  const double witness_norm = sup_norm_interval(direct).value;
  double witness_ratio = 0.0;
  for (int k = 0; k <= degree; ++k)
    witness_ratio =
        std::max(witness_ratio, direct.coeffs[k].abs() / (d[k] * witness_norm));

  result.chebyshev_ratio = witness_ratio;
  result.chebyshev_equality =
      coeffs_exact && std::abs(witness_norm - 1.0) <= 1e-10;
  result.bound_holds = result.max_ratio <= 1.0 + 1e-9;
  return result;
}

} // namespace huslab
