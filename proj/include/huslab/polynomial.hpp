#pragma once

#include "huslab/scalar.hpp"

#include <vector>

namespace huslab {

/// Polynomial in the monomial basis, a_0 + a_1 x + ... + a_m x^m.
/// The degree is nominal: trailing zero coefficients are legitimate, since
/// basis representations are degree-indexed.
struct MonomialPoly {
  std::vector<Scalar> coeffs;

  MonomialPoly() : coeffs(1) {}
  explicit MonomialPoly(std::vector<Scalar> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool exact() const;
  bool real_coefficients(double tol = 1e-14) const;
};

/// Polynomial in the plain basis x^k (1-x)^{m-k}, k = 0..m (no binomial
/// weights). The representation at fixed degree m is unique.
struct BernsteinPoly {
  std::vector<Scalar> coeffs;

  BernsteinPoly() : coeffs(1) {}
  explicit BernsteinPoly(std::vector<Scalar> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool exact() const;
  bool real_coefficients(double tol = 1e-14) const;
};

struct DiskDomain {
  double radius = 1.0;
};

/// Rewrites p in the basis x^k (1-x)^{m-k}. Requires m >= degree(p).
/// Exact when the coefficients are exact.
BernsteinPoly to_bernstein(const MonomialPoly& p, int m);

/// Expands each basis term by the binomial theorem and collects powers.
MonomialPoly from_bernstein(const BernsteinPoly& b);

/// The shifted Chebyshev polynomial T_m(2x-1) in the plain basis:
/// c_k = (-1)^{m-k} C(2m,2k), exact integers.
BernsteinPoly chebyshev_bernstein(int m);

/// Horner evaluation; exact when polynomial and point are both exact.
Scalar eval(const MonomialPoly& p, const Scalar& z);
/// Direct power-form evaluation of sum c_k z^k (1-z)^{m-k}.
Scalar eval(const BernsteinPoly& b, const Scalar& z);

std::complex<double> eval(const MonomialPoly& p, std::complex<double> z);
std::complex<double> eval(const BernsteinPoly& b, std::complex<double> z);

} // namespace huslab
