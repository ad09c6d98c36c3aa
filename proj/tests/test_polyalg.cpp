#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "huslab/bound_check.hpp"
#include "huslab/norms.hpp"
#include "huslab/rng.hpp"

#include <complex>

using namespace huslab;

namespace {

MonomialPoly mono(std::vector<BigRational> coeffs) {
  std::vector<Scalar> s(coeffs.begin(), coeffs.end());
  return MonomialPoly(std::move(s));
}

BernsteinPoly bern(std::vector<BigRational> coeffs) {
  std::vector<Scalar> s(coeffs.begin(), coeffs.end());
  return BernsteinPoly(std::move(s));
}

// Exact polynomial identity: compare with zero extension past either degree.
template <typename PolyA, typename PolyB>
bool same_poly(const PolyA& a, const PolyB& b) {
  const size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  const Scalar zero;
  for (size_t i = 0; i < n; ++i) {
    const Scalar& x = i < a.coeffs.size() ? a.coeffs[i] : zero;
    const Scalar& y = i < b.coeffs.size() ? b.coeffs[i] : zero;
    if (!(x == y))
      return false;
  }
  return true;
}

// Independent oracle: monomial coefficients of T_m(2x-1) by the recurrence
// T_{m+1} = 2(2x-1) T_m - T_{m-1}, in exact rational arithmetic.
std::vector<BigRational> chebyshev_shifted_monomial(int m) {
  std::vector<BigRational> prev{1};          // T_0
  std::vector<BigRational> cur{-1, 2};       // T_1(2x-1) = 2x - 1
  if (m == 0)
    return prev;
  for (int k = 1; k < m; ++k) {
    std::vector<BigRational> next(k + 2, BigRational(0));
    for (size_t j = 0; j < cur.size(); ++j) {
      next[j + 1] += 4 * cur[j]; // 2 * (2x) * T_k
      next[j] -= 2 * cur[j];     // 2 * (-1) * T_k
    }
    for (size_t j = 0; j < prev.size(); ++j)
      next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MonomialPoly random_rational_poly(Rng& rng, int degree) {
  std::vector<Scalar> coeffs(degree + 1);
  for (auto& c : coeffs)
    c = Scalar(BigRational(rng.uniform_int(-1000, 1000), 1000));
  return MonomialPoly(std::move(coeffs));
}

} // namespace

TEST_CASE("to_bernstein: frozen conversions") {
  CHECK(same_poly(to_bernstein(mono({1}), 2), bern({1, 2, 1})));
  CHECK(same_poly(to_bernstein(mono({1, -8, 8}), 2), bern({1, -6, 1})));
  CHECK(same_poly(to_bernstein(mono({1, -8, 8}), 2), chebyshev_bernstein(2)));
  CHECK(same_poly(to_bernstein(mono({0, 1}), 2), bern({0, 1, 1})));
  CHECK_THROWS_AS(to_bernstein(mono({0, 0, 0, 1}), 2), std::invalid_argument);
}

TEST_CASE("from_bernstein: frozen expansions") {
  CHECK(same_poly(from_bernstein(bern({1, 1})), mono({1})));
  CHECK(same_poly(from_bernstein(bern({1, -6, 1})), mono({1, -8, 8})));
}

TEST_CASE("conversion round trip is exact on random rational polynomials") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int degree = static_cast<int>(rng.uniform_int(0, 12));
    const int m = degree + static_cast<int>(rng.uniform_int(0, 3));
    const MonomialPoly p = random_rational_poly(rng, degree);
    const MonomialPoly back = from_bernstein(to_bernstein(p, m));
    CHECK(same_poly(p, back));
  }
}

TEST_CASE("chebyshev_bernstein: coefficients and endpoint values") {
  CHECK(same_poly(chebyshev_bernstein(1), bern({-1, 1})));
  CHECK(same_poly(chebyshev_bernstein(2), bern({1, -6, 1})));
  for (int m = 1; m <= 10; ++m) {
    const Scalar at0 = eval(chebyshev_bernstein(m), Scalar(BigRational(0)));
    CHECK(at0 == Scalar(BigRational(m % 2 == 0 ? 1 : -1)));
  }
  CHECK_THROWS_AS(chebyshev_bernstein(0), std::invalid_argument);
}

TEST_CASE("chebyshev_bernstein matches the recurrence oracle up to m = 15") {
  for (int m = 1; m <= 15; ++m) {
    const MonomialPoly expanded = from_bernstein(chebyshev_bernstein(m));
    const std::vector<BigRational> oracle = chebyshev_shifted_monomial(m);
    REQUIRE(expanded.coeffs.size() == oracle.size());
    for (size_t j = 0; j < oracle.size(); ++j)
      CHECK(expanded.coeffs[j] == Scalar(oracle[j]));
  }
}

TEST_CASE("eval: exact and floating points") {
  CHECK(eval(chebyshev_bernstein(2), Scalar(BigRational(0))) ==
        Scalar(BigRational(1)));
  CHECK(eval(chebyshev_bernstein(2), Scalar(BigRational(1, 2))) ==
        Scalar(BigRational(-1)));
  const std::complex<double> z{0.3, 0.4};
  const std::complex<double> one = eval(bern({1, 2, 1}), z);
  CHECK(std::abs(one - 1.0) < 1e-14);
  // Horner on the monomial side agrees with the plain-basis evaluation.
  const MonomialPoly p = mono({1, -8, 8});
  CHECK(std::abs(eval(p, z) - eval(to_bernstein(p, 4), z)) < 1e-13);
}

TEST_CASE("interval norm: frozen values") {
  for (int m : {1, 2, 5}) {
    const auto r = sup_norm_interval(chebyshev_bernstein(m));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(sup_norm_interval(mono({7})).value == doctest::Approx(7.0));
  const auto hump = sup_norm_interval(bern({0, 1, 0}));
  CHECK(hump.value == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(hump.at == doctest::Approx(0.5).epsilon(1e-6));

  MonomialPoly complex_poly(
      {Scalar(RationalComplex{1, 1}), Scalar(BigRational(2))});
  CHECK_THROWS_AS(sup_norm_interval(complex_poly), std::invalid_argument);
}

TEST_CASE("disk norm: frozen values") {
  for (int k : {0, 1, 3}) {
    std::vector<Scalar> c(k + 1);
    c[k] = Scalar(BigRational(1));
    const auto r = sup_norm_disk(MonomialPoly(c), DiskDomain{2.0});
    CHECK(r.value == doctest::Approx(std::pow(2.0, k)).epsilon(1e-8));
  }
  const auto line = sup_norm_disk(mono({-1, 2}), DiskDomain{1.0});
  CHECK(line.value == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(sup_norm_disk(mono({5}), DiskDomain{0.7}).value ==
        doctest::Approx(5.0));
  CHECK_THROWS_AS(sup_norm_disk(mono({1}), DiskDomain{0.0}),
                  std::invalid_argument);
}

TEST_CASE("disk norm grows with the radius; interval norm below disk norm") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const MonomialPoly p =
        random_rational_poly(rng, static_cast<int>(rng.uniform_int(1, 8)));
    const double r1 = 0.2 + rng.uniform01();
    const double r2 = r1 + rng.uniform01();
    const double n1 = sup_norm_disk(p, DiskDomain{r1}).value;
    const double n2 = sup_norm_disk(p, DiskDomain{r2}).value;
    CHECK(n1 <= n2 * (1.0 + 1e-9));
    const double big = std::max(1.0, r1);
    CHECK(sup_norm_interval(p).value <=
          sup_norm_disk(p, DiskDomain{big}).value * (1.0 + 1e-9));
  }
}

TEST_CASE("coefficient bound holds on random polynomials (sampled)") {
  for (int degree : {2, 5, 9}) {
    const BoundCheckResult r = run_bound_check(degree, 300, 42);
    CHECK(r.bound_holds);
    CHECK(r.chebyshev_equality);
    CHECK(r.max_ratio <= 1.0 + 1e-9);
    CHECK(r.chebyshev_ratio == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("bound-check rejects bad parameters") {
  CHECK_THROWS_AS(run_bound_check(0, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_bound_check(3, 0, 1), std::invalid_argument);
}

TEST_CASE("random_unit_norm_poly is reproducible and unit norm") {
  const MonomialPoly a = random_unit_norm_poly(6, 42, 17);
  const MonomialPoly b = random_unit_norm_poly(6, 42, 17);
  REQUIRE(a.coeffs.size() == b.coeffs.size());
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    CHECK(a.coeffs[i].real() == b.coeffs[i].real());
  CHECK(sup_norm_interval(a).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(a.exact());
}
