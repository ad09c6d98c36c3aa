#include "huslab/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace huslab {

BigInt binom(int n, int k) {
  if (n < 0)
    throw std::invalid_argument("binom: n must be nonnegative");
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1; // always divides exactly at this point
  }
  return result;
}

namespace {

void check_range(const char* who, int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::out_of_range(std::string(who) + ": need 0 <= k <= n");
}

} // namespace

BigInt d_coeff_sum(int n, int k) {
  check_range("d_coeff_sum", n, k);
  BigInt sum = 0;
  BigInt four_pow = 1;
  const int jmax = std::min(k, n - k);
  for (int j = 0; j <= jmax; ++j) {
    sum += binom(n, 2 * j) * binom(n - 2 * j, k - j) * four_pow;
    four_pow *= 4;
  }
  return sum;
}

BigInt d_coeff_closed(int n, int k) {
  check_range("d_coeff_closed", n, k);
  return binom(2 * n, 2 * k);
}

std::vector<BigRational> ratio_sequence(int m) {
  if (m < 1)
    throw std::invalid_argument("ratio_sequence: m must be positive");
  std::vector<BigRational> seq;
  seq.reserve(m + 1);
  for (int k = 0; k <= m; ++k)
    seq.emplace_back(d_coeff_closed(m, k), binom(m, k));
  return seq;
}

std::set<int> peak_indices(int m) {
  const std::vector<BigRational> seq = ratio_sequence(m);
  const BigRational peak = *std::max_element(seq.begin(), seq.end());
  std::set<int> indices;
  for (int k = 0; k <= m; ++k)
    if (seq[k] == peak)
      indices.insert(k);
  return indices;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0)
    throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0)
    return BigRational(-num, -den);
  return BigRational(num, den);
}

double to_double(const BigRational& r) { return static_cast<double>(r); }

std::string rational_string(const BigRational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

/// Signed decimal digit string -> BigInt. Leading zeros are stripped first;
/// the big-integer constructor would read them as an octal prefix.
BigInt parse_decimal_int(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.erase(0, 1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("not a decimal integer: '" + text + "'");
  const auto first = s.find_first_not_of('0');
  s = first == std::string::npos ? "0" : s.substr(first);
  BigInt v(s);
  return negative ? -v : v;
}

} // namespace

BigRational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return ParseError("parse_rational: cannot parse '" + text + "'");
  };
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty())
    throw bad();

  try {
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      const BigInt num = parse_decimal_int(s.substr(0, slash));
      const BigInt den = parse_decimal_int(s.substr(slash + 1));
      if (den == 0)
        throw bad();
      return make_rational(num, den);
    }

    const auto dot = s.find('.');
    std::string digits = s;
    BigInt den = 1;
    if (dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      digits = s.substr(0, dot) + frac;
      for (size_t i = 0; i < frac.size(); ++i)
        den *= 10;
      if (digits.empty() || digits == "-" || digits == "+")
        throw bad();
    }
    return make_rational(parse_decimal_int(digits), den);
  } catch (const ParseError&) {
    throw bad();
  }
}

} // namespace huslab
