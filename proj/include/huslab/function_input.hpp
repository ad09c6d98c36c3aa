#pragma once

#include "huslab/polynomial.hpp"

#include <variant>
#include <vector>

namespace huslab {

/// Point samples on strictly increasing abscissae. Nodes are exact rationals
/// so that operator sample points like k/n can be matched exactly.
struct GridFunction {
  std::vector<BigRational> nodes;
  std::vector<Scalar> values;
};

/// Piecewise-constant function: values[i] on [breakpoints[i], breakpoints[i+1]),
/// with the final piece closed on the right.
struct StepFunction {
  std::vector<BigRational> breakpoints;
  std::vector<Scalar> values; // one fewer entry than breakpoints
};

/// Taylor coefficients c_0, c_1, ... of f at the origin (finite list).
struct TaylorFunction {
  std::vector<Scalar> coeffs;
};

using FunctionInput =
    std::variant<GridFunction, StepFunction, TaylorFunction, MonomialPoly>;

/// Checks the structural invariants (monotone abscissae, size coherence).
void validate(const FunctionInput& f);

/// f(x) at an exact abscissa. Grid inputs require the node to be present;
/// step inputs require x inside the covered range.
Scalar value_at(const FunctionInput& f, const BigRational& x);

/// Integral of f over [lo, hi]. Exact for polynomial, Taylor and step inputs;
/// grid inputs integrate the piecewise-linear interpolant (still exact in
/// rational arithmetic when the samples are exact).
Scalar integrate(const FunctionInput& f, const BigRational& lo,
                 const BigRational& hi);

BigRational rational_pow(const BigRational& base, int exponent);

} // namespace huslab
