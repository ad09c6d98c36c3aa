#pragma once

#include "huslab/function_input.hpp"

#include <optional>
#include <string>

namespace huslab {

enum class OperatorKind {
  bernstein,
  szasz_mirakjan,
  beta,
  stancu,
  kantorovich,
  bernstein_schurer,
  kantorovich_schurer,
  lorentz,
};

std::string kind_name(OperatorKind kind);
/// Accepts canonical names with either '_' or '-' separators.
OperatorKind parse_kind(const std::string& name);

/// One operator instance. Parameter presence must match the kind: p is for
/// the Schurer kinds, a/b for Stancu, truncation for Szasz-Mirakjan.
struct OperatorSpec {
  OperatorKind kind = OperatorKind::bernstein;
  int n = 1;
  int p = 0;
  BigRational a = 0;
  BigRational b = 0;
  std::optional<int> truncation;
};

void validate(const OperatorSpec& spec);

/// Which subinterval width the Kantorovich-Schurer operator integrates over:
/// `printed` uses 1/(n+1) (n+p+1 subintervals reaching past 1), `classical`
/// uses 1/(n+p+1) (a partition of [0,1]).
enum class KsDenominator { printed, classical };

/// B_n f, coefficients c_k = C(n,k) f(k/n).
BernsteinPoly apply_bernstein(int n, const FunctionInput& f);

/// Stancu variant sampling at (k+a)/(n+b).
BernsteinPoly apply_stancu(int n, const BigRational& a, const BigRational& b,
                           const FunctionInput& f);

/// Kantorovich averaging operator, c_k = (n+1) C(n,k) * integral of f over
/// [k/(n+1), (k+1)/(n+1)]. Exact for polynomial and step inputs.
BernsteinPoly apply_kantorovich(int n, const FunctionInput& f);

/// Degree n+p operator sampling at k/n for k = 0..n+p (abscissae reach
/// (n+p)/n beyond 1 when p >= 1).
BernsteinPoly apply_bernstein_schurer(int n, int p, const FunctionInput& f);

BernsteinPoly apply_kantorovich_schurer(
    int n, int p, const FunctionInput& f,
    KsDenominator denominator = KsDenominator::printed);

struct SzaszResult {
  double value = 0.0;
  double tail_bound = 0.0; // Poisson tail estimate for the dropped terms
  int truncation = 0;
};

/// Truncated Szasz-Mirakjan series e^{-nx} sum_j f(j/n) (nx)^j / j!.
/// Default truncation max(64, ceil(8 n x)); throws if the tail bound cannot
/// be brought below 1e-12.
SzaszResult apply_szasz(int n, const FunctionInput& f, double x,
                        std::optional<int> truncation = std::nullopt);

/// Weighted-average value: for f = sum a_j e_j this telescopes to
/// sum a_j prod_{i<j} (nx+1+i)/(n+2+i); exact for rational x. Grid inputs
/// fall back to adaptive quadrature of the weight integrals (tol 1e-9).
Scalar apply_beta(int n, const FunctionInput& f, const Scalar& x);

/// Taylor-data polynomial sum_k C(n,k) (z/n)^k f^(k)(0); output coefficient
/// j is c_j prod_{i=1}^{j-1} (1 - i/n). Coefficients beyond index n vanish.
MonomialPoly apply_lorentz(int n, const FunctionInput& f);

/// lambda_j = prod_{i=1}^{j-1} (1 - i/n); lambda_0 = lambda_1 = 1 and
/// lambda_j = 0 from j = n+1 on.
BigRational lorentz_eigenvalue(int n, int j);

} // namespace huslab
