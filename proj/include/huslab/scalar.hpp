#pragma once

#include "huslab/exactmath.hpp"

#include <complex>
#include <variant>

namespace huslab {

/// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
  BigRational re;
  BigRational im;

  RationalComplex() = default;
  RationalComplex(BigRational r, BigRational i = 0)
      : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const RationalComplex& o) const = default;

  RationalComplex operator+(const RationalComplex& o) const {
    return {re + o.re, im + o.im};
  }
  RationalComplex operator-(const RationalComplex& o) const {
    return {re - o.re, im - o.im};
  }
  RationalComplex operator*(const RationalComplex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  RationalComplex operator-() const { return {-re, -im}; }

  std::complex<double> value() const {
    return {to_double(re), to_double(im)};
  }
};

/// Coefficient scalar carrying a representation tag: either an exact
/// RationalComplex or a double-precision complex imported from float data.
/// Arithmetic stays exact as long as both operands are exact.
class Scalar {
public:
  Scalar() : v_(RationalComplex{}) {}
  Scalar(int v) : v_(RationalComplex{BigRational(v)}) {}
  Scalar(BigInt v) : v_(RationalComplex{BigRational(std::move(v))}) {}
  Scalar(BigRational re) : v_(RationalComplex{std::move(re)}) {}
  Scalar(RationalComplex v) : v_(std::move(v)) {}
  explicit Scalar(double re, double im = 0.0)
      : v_(std::complex<double>{re, im}) {}
  explicit Scalar(std::complex<double> v) : v_(v) {}

  bool exact() const { return std::holds_alternative<RationalComplex>(v_); }

  const RationalComplex& exact_value() const {
    if (!exact())
      throw std::logic_error("Scalar: float-tagged value has no exact form");
    return std::get<RationalComplex>(v_);
  }

  std::complex<double> value() const {
    return exact() ? std::get<RationalComplex>(v_).value()
                   : std::get<std::complex<double>>(v_);
  }

  double real() const { return value().real(); }
  double imag() const { return value().imag(); }
  double abs() const { return std::abs(value()); }

  Scalar operator+(const Scalar& o) const {
    if (exact() && o.exact())
      return Scalar(exact_value() + o.exact_value());
    return Scalar(value() + o.value());
  }
  Scalar operator-(const Scalar& o) const {
    if (exact() && o.exact())
      return Scalar(exact_value() - o.exact_value());
    return Scalar(value() - o.value());
  }
  Scalar operator*(const Scalar& o) const {
    if (exact() && o.exact())
      return Scalar(exact_value() * o.exact_value());
    return Scalar(value() * o.value());
  }
  Scalar operator-() const {
    if (exact())
      return Scalar(-exact_value());
    return Scalar(-value());
  }
  Scalar operator/(const Scalar& o) const {
    if (exact() && o.exact()) {
      const RationalComplex& a = exact_value();
      const RationalComplex& b = o.exact_value();
      const BigRational den = b.re * b.re + b.im * b.im;
      if (den == 0)
        throw std::domain_error("Scalar: division by zero");
      return Scalar(RationalComplex{(a.re * b.re + a.im * b.im) / den,
                                    (a.im * b.re - a.re * b.im) / den});
    }
    return Scalar(value() / o.value());
  }

  /// Exact scalars compare rationally; anything else compares as complex.
  bool operator==(const Scalar& o) const {
    if (exact() && o.exact())
      return exact_value() == o.exact_value();
    return value() == o.value();
  }

  bool is_real(double tol = 1e-14) const {
    return std::abs(value().imag()) <= tol;
  }

private:
  std::variant<RationalComplex, std::complex<double>> v_;
};

} // namespace huslab
