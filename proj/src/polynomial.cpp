#include "huslab/polynomial.hpp"

#include <stdexcept>

namespace huslab {

namespace {

bool all_exact(const std::vector<Scalar>& coeffs) {
  for (const Scalar& c : coeffs)
    if (!c.exact())
      return false;
  return true;
}

bool all_real(const std::vector<Scalar>& coeffs, double tol) {
  for (const Scalar& c : coeffs)
    if (!c.is_real(tol))
      return false;
  return true;
}

} // namespace

MonomialPoly::MonomialPoly(std::vector<Scalar> c) : coeffs(std::move(c)) {
  if (coeffs.empty())
    throw std::invalid_argument("MonomialPoly: empty coefficient list");
}

bool MonomialPoly::exact() const { return all_exact(coeffs); }
bool MonomialPoly::real_coefficients(double tol) const {
  return all_real(coeffs, tol);
}

BernsteinPoly::BernsteinPoly(std::vector<Scalar> c) : coeffs(std::move(c)) {
  if (coeffs.empty())
    throw std::invalid_argument("BernsteinPoly: empty coefficient list");
}

bool BernsteinPoly::exact() const { return all_exact(coeffs); }
bool BernsteinPoly::real_coefficients(double tol) const {
  return all_real(coeffs, tol);
}

BernsteinPoly to_bernstein(const MonomialPoly& p, int m) {
  if (m < p.degree())
    throw std::invalid_argument(
        "to_bernstein: target degree below polynomial degree");
  // x^j = x^j (x + (1-x))^{m-j}, so a_j contributes a_j C(m-j,i) to c_{j+i}.
  std::vector<Scalar> c(m + 1);
  for (int j = 0; j <= p.degree(); ++j) {
    const Scalar& a = p.coeffs[j];
    for (int i = 0; i + j <= m; ++i)
      c[j + i] = c[j + i] + a * Scalar(binom(m - j, i));
  }
  return BernsteinPoly(std::move(c));
}

MonomialPoly from_bernstein(const BernsteinPoly& b) {
  const int m = b.degree();
  // x^k (1-x)^{m-k} = sum_t C(m-k,t) (-1)^t x^{k+t}
  std::vector<Scalar> a(m + 1);
  for (int k = 0; k <= m; ++k) {
    const Scalar& c = b.coeffs[k];
    for (int t = 0; k + t <= m; ++t) {
      BigInt w = binom(m - k, t);
      if (t % 2 != 0)
        w = -w;
      a[k + t] = a[k + t] + c * Scalar(w);
    }
  }
  return MonomialPoly(std::move(a));
}

BernsteinPoly chebyshev_bernstein(int m) {
  if (m < 1)
    throw std::invalid_argument("chebyshev_bernstein: m must be positive");
  std::vector<Scalar> c(m + 1);
  for (int k = 0; k <= m; ++k) {
    BigInt v = d_coeff_closed(m, k);
    if ((m - k) % 2 != 0)
      v = -v;
    c[k] = Scalar(v);
  }
  return BernsteinPoly(std::move(c));
}

Scalar eval(const MonomialPoly& p, const Scalar& z) {
  Scalar acc = p.coeffs.back();
  for (int j = p.degree() - 1; j >= 0; --j)
    acc = acc * z + p.coeffs[j];
  return acc;
}

Scalar eval(const BernsteinPoly& b, const Scalar& z) {
  const int m = b.degree();
  const Scalar one(BigRational(1));
  const Scalar w = one - z;
  // powers z^k and (1-z)^{m-k}
  std::vector<Scalar> zp(m + 1), wp(m + 1);
  zp[0] = one;
  wp[0] = one;
  for (int k = 1; k <= m; ++k) {
    zp[k] = zp[k - 1] * z;
    wp[k] = wp[k - 1] * w;
  }
  Scalar acc;
  for (int k = 0; k <= m; ++k)
    acc = acc + b.coeffs[k] * zp[k] * wp[m - k];
  return acc;
}

std::complex<double> eval(const MonomialPoly& p, std::complex<double> z) {
  std::complex<double> acc = p.coeffs.back().value();
  for (int j = p.degree() - 1; j >= 0; --j)
    acc = acc * z + p.coeffs[j].value();
  return acc;
}

std::complex<double> eval(const BernsteinPoly& b, std::complex<double> z) {
  const int m = b.degree();
  const std::complex<double> w = 1.0 - z;
  std::vector<std::complex<double>> zp(m + 1), wp(m + 1);
  zp[0] = 1.0;
  wp[0] = 1.0;
  for (int k = 1; k <= m; ++k) {
    zp[k] = zp[k - 1] * z;
    wp[k] = wp[k - 1] * w;
  }
  std::complex<double> acc = 0.0;
  for (int k = 0; k <= m; ++k)
    acc += b.coeffs[k].value() * zp[k] * wp[m - k];
  return acc;
}

} // namespace huslab
