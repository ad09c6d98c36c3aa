#include "huslab/function_input.hpp"

#include <algorithm>
#include <stdexcept>

namespace huslab {

namespace {

void require_strictly_increasing(const std::vector<BigRational>& xs,
                                 const char* what) {
  for (size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i - 1] < xs[i]))
      throw std::invalid_argument(std::string(what) +
                                  " must be strictly increasing");
}

Scalar poly_value(const std::vector<Scalar>& coeffs, const BigRational& x) {
  if (coeffs.empty())
    return Scalar();
  const Scalar xs{BigRational(x)};
  Scalar acc = coeffs.back();
  for (int j = static_cast<int>(coeffs.size()) - 2; j >= 0; --j)
    acc = acc * xs + coeffs[j];
  return acc;
}

// integral of sum a_j x^j over [lo, hi] via the antiderivative
Scalar poly_integral(const std::vector<Scalar>& coeffs, const BigRational& lo,
                     const BigRational& hi) {
  Scalar acc;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    const int e = static_cast<int>(j) + 1;
    const BigRational slice =
        (rational_pow(hi, e) - rational_pow(lo, e)) / e;
    acc = acc + coeffs[j] * Scalar(slice);
  }
  return acc;
}

const char* domain_error_msg = "input domain does not cover the integration range";

} // namespace

BigRational rational_pow(const BigRational& base, int exponent) {
  if (exponent < 0)
    throw std::invalid_argument("rational_pow: negative exponent");
  BigRational acc = 1;
  for (int i = 0; i < exponent; ++i)
    acc *= base;
  return acc;
}

void validate(const FunctionInput& f) {
  if (const auto* g = std::get_if<GridFunction>(&f)) {
    if (g->nodes.empty() || g->nodes.size() != g->values.size())
      throw std::invalid_argument("grid: nodes/values size mismatch");
    require_strictly_increasing(g->nodes, "grid nodes");
  } else if (const auto* s = std::get_if<StepFunction>(&f)) {
    if (s->breakpoints.size() < 2 ||
        s->values.size() + 1 != s->breakpoints.size())
      throw std::invalid_argument(
          "step: values must have one fewer entry than breakpoints");
    require_strictly_increasing(s->breakpoints, "step breakpoints");
  }
  // Taylor and polynomial variants carry no further structure to check.
}

Scalar value_at(const FunctionInput& f, const BigRational& x) {
  if (const auto* g = std::get_if<GridFunction>(&f)) {
    const auto it = std::lower_bound(g->nodes.begin(), g->nodes.end(), x);
    if (it == g->nodes.end() || *it != x)
      throw std::invalid_argument("missing sample point at x = " +
                                  rational_string(x));
    return g->values[static_cast<size_t>(it - g->nodes.begin())];
  }
  if (const auto* s = std::get_if<StepFunction>(&f)) {
    const auto& bp = s->breakpoints;
    if (x < bp.front() || x > bp.back())
      throw std::invalid_argument("step function undefined at x = " +
                                  rational_string(x));
    if (x == bp.back())
      return s->values.back();
    const auto it = std::upper_bound(bp.begin(), bp.end(), x);
    return s->values[static_cast<size_t>(it - bp.begin()) - 1];
  }
  if (const auto* t = std::get_if<TaylorFunction>(&f))
    return poly_value(t->coeffs, x);
  return poly_value(std::get<MonomialPoly>(f).coeffs, x);
}

Scalar integrate(const FunctionInput& f, const BigRational& lo,
                 const BigRational& hi) {
  if (lo > hi)
    throw std::invalid_argument("integrate: lo must not exceed hi");
  if (const auto* t = std::get_if<TaylorFunction>(&f))
    return poly_integral(t->coeffs, lo, hi);
  if (const auto* p = std::get_if<MonomialPoly>(&f))
    return poly_integral(p->coeffs, lo, hi);

  if (const auto* s = std::get_if<StepFunction>(&f)) {
    const auto& bp = s->breakpoints;
    if (lo < bp.front() || hi > bp.back())
      throw std::invalid_argument(domain_error_msg);
    Scalar acc;
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
      const BigRational a = std::max(bp[i], lo);
      const BigRational b = std::min(bp[i + 1], hi);
      if (a < b)
        acc = acc + s->values[i] * Scalar(BigRational(b - a));
    }
    return acc;
  }

  // Grid: exact trapezoid on the piecewise-linear interpolant.
  const auto& g = std::get<GridFunction>(f);
  const auto& nodes = g.nodes;
  if (nodes.size() < 2 || lo < nodes.front() || hi > nodes.back())
    throw std::invalid_argument(domain_error_msg);
  const auto interp = [&](size_t i, const BigRational& x) {
    const BigRational t = (x - nodes[i]) / (nodes[i + 1] - nodes[i]);
    return g.values[i] +
           (g.values[i + 1] - g.values[i]) * Scalar(BigRational(t));
  };
  Scalar acc;
  const Scalar half{BigRational(1, 2)};
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    const BigRational a = std::max(nodes[i], lo);
    const BigRational b = std::min(nodes[i + 1], hi);
    if (a < b)
      acc = acc + (interp(i, a) + interp(i, b)) * half *
                      Scalar(BigRational(b - a));
  }
  return acc;
}

} // namespace huslab
