#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "huslab/exactmath.hpp"

using namespace huslab;

TEST_CASE("binom basics and out-of-range convention") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(10, -2) == 0);
  CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
}

TEST_CASE("binom satisfies the Pascal identity up to n = 120") {
  for (int n = 1; n <= 120; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("d coefficient sum: frozen values") {
  // j=0 gives C(2,0)C(2,1) = 2, j=1 gives C(2,2)C(0,0)*4 = 4
  CHECK(d_coeff_sum(2, 1) == 6);
  for (int n = 0; n <= 12; ++n)
    CHECK(d_coeff_sum(n, 0) == 1);
  CHECK(d_coeff_sum(3, 1) == 15);
  CHECK(d_coeff_sum(3, 1) == binom(6, 2));
  CHECK_THROWS_AS(d_coeff_sum(3, 4), std::out_of_range);
  CHECK_THROWS_AS(d_coeff_sum(3, -1), std::out_of_range);
}

TEST_CASE("d coefficient closed form: frozen values") {
  CHECK(d_coeff_closed(2, 1) == 6);
  CHECK(d_coeff_closed(5, 5) == 1);
  CHECK(d_coeff_closed(3, 2) == 15);
  CHECK(d_coeff_closed(3, 2) == d_coeff_sum(3, 2));
  CHECK_THROWS_AS(d_coeff_closed(2, 3), std::out_of_range);
}

TEST_CASE("sum form equals closed form for all 0 <= k <= n <= 40") {
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(d_coeff_sum(n, k) == d_coeff_closed(n, k));
}

TEST_CASE("d is symmetric in k <-> n-k") {
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(d_coeff_closed(n, k) == d_coeff_closed(n, n - k));
}

TEST_CASE("ratio sequence: frozen small cases") {
  const auto expect =
      [](const std::vector<BigRational>& got, std::vector<long> want) {
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i)
          CHECK(got[i] == BigRational(want[i]));
      };
  expect(ratio_sequence(3), {1, 5, 5, 1});
  expect(ratio_sequence(1), {1, 1});
  expect(ratio_sequence(2), {1, 3, 1});
  CHECK_THROWS_AS(ratio_sequence(0), std::invalid_argument);
}

TEST_CASE("consecutive ratio law a_{k+1}(2k+1) = a_k(2m-2k-1), m <= 200") {
  for (int m = 1; m <= 200; ++m) {
    const auto seq = ratio_sequence(m);
    for (int k = 0; k < m; ++k)
      CHECK(seq[k + 1] * (2 * k + 1) == seq[k] * (2 * m - 2 * k - 1));
  }
}

TEST_CASE("peak indices: frozen small cases") {
  CHECK(peak_indices(4) == std::set<int>{2});
  CHECK(peak_indices(3) == std::set<int>{1, 2});
  CHECK(peak_indices(1) == std::set<int>{0, 1});
}

TEST_CASE("peak indices match the parity rule for m <= 200") {
  // The odd case is a genuine exact tie; checked by computation, not assumed.
  for (int m = 1; m <= 200; ++m) {
    const std::set<int> expected = (m % 2 == 0)
                                       ? std::set<int>{m / 2}
                                       : std::set<int>{m / 2, m / 2 + 1};
    CHECK(peak_indices(m) == expected);
  }
}

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, -4) == BigRational(-3, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK(rational_string(BigRational(5)) == "5/1");
  CHECK(rational_string(BigRational(-3, 2)) == "-3/2");

  CHECK(parse_rational("3/4") == BigRational(3, 4));
  CHECK(parse_rational("-6/4") == BigRational(-3, 2));
  CHECK(parse_rational("5") == BigRational(5));
  CHECK(parse_rational("+5") == BigRational(5));
  CHECK(parse_rational("-0.25") == BigRational(-1, 4));
  CHECK(parse_rational("0.3") == BigRational(3, 10));
  CHECK(parse_rational(" 1 / 3 ") == BigRational(1, 3));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("."), ParseError);
}
