#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace huslab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Malformed textual input (CLI literals, report files). Kept distinct from
/// std::invalid_argument, which signals domain-parameter violations.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// C(n,k). Requires n >= 0; returns 0 when k < 0 or k > n so that
/// convolution-style sums need no range guards.
BigInt binom(int n, int k);

/// Coefficient-bound constant in summed form:
/// d(n,k) = sum_{j=0}^{min(k,n-k)} C(n,2j) C(n-2j,k-j) 4^j, for 0 <= k <= n.
BigInt d_coeff_sum(int n, int k);

/// Same constant in closed form, C(2n,2k).
BigInt d_coeff_closed(int n, int k);

/// a_k = C(2m,2k)/C(m,k) for k = 0..m. Consecutive ratios obey
/// a_{k+1}/a_k = (2m-2k-1)/(2k+1).
std::vector<BigRational> ratio_sequence(int m);

/// All k maximizing a_k: {m/2} when m is even, {(m-1)/2, (m+1)/2} when odd.
std::set<int> peak_indices(int m);

/// Rational from a signed numerator/denominator pair (den != 0).
BigRational make_rational(const BigInt& num, const BigInt& den);

double to_double(const BigRational& r);

/// Always "p/q", including "5/1"; JSON numbers cannot hold big integers.
std::string rational_string(const BigRational& r);

/// Accepts "p/q", plain integers, and decimal literals ("-0.25" -> -1/4).
BigRational parse_rational(const std::string& text);

} // namespace huslab
