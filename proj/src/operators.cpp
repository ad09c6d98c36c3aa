#include "huslab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace huslab {

namespace {

const std::pair<OperatorKind, const char*> kKindNames[] = {
    {OperatorKind::bernstein, "bernstein"},
    {OperatorKind::szasz_mirakjan, "szasz_mirakjan"},
    {OperatorKind::beta, "beta"},
    {OperatorKind::stancu, "stancu"},
    {OperatorKind::kantorovich, "kantorovich"},
    {OperatorKind::bernstein_schurer, "bernstein_schurer"},
    {OperatorKind::kantorovich_schurer, "kantorovich_schurer"},
    {OperatorKind::lorentz, "lorentz"},
};

bool is_schurer(OperatorKind kind) {
  return kind == OperatorKind::bernstein_schurer ||
         kind == OperatorKind::kantorovich_schurer;
}

} // namespace

std::string kind_name(OperatorKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind)
      return name;
  throw std::logic_error("kind_name: unknown operator kind");
}

OperatorKind parse_kind(const std::string& name) {
  std::string canon = name;
  std::replace(canon.begin(), canon.end(), '-', '_');
  for (const auto& [k, known] : kKindNames)
    if (canon == known)
      return k;
  throw std::invalid_argument("unknown operator kind '" + name + "'");
}

void validate(const OperatorSpec& spec) {
  if (spec.n < 1)
    throw std::invalid_argument("operator parameter n must be >= 1");
  if (spec.p < 0)
    throw std::invalid_argument("operator parameter p must be >= 0");
  if (spec.p != 0 && !is_schurer(spec.kind))
    throw std::invalid_argument("parameter p applies to Schurer kinds only");
  if (spec.kind == OperatorKind::stancu) {
    if (spec.a < 0 || spec.a > spec.b)
      throw std::invalid_argument("stancu parameters require 0 <= a <= b");
  } else if (spec.a != 0 || spec.b != 0) {
    throw std::invalid_argument("parameters a/b apply to stancu only");
  }
  if (spec.truncation) {
    if (spec.kind != OperatorKind::szasz_mirakjan)
      throw std::invalid_argument(
          "truncation applies to szasz_mirakjan only");
    if (*spec.truncation < 1)
      throw std::invalid_argument("truncation must be >= 1");
  }
}

namespace {

void require_n(int n) {
  if (n < 1)
    throw std::invalid_argument("operator parameter n must be >= 1");
}

void require_p(int p) {
  if (p < 0)
    throw std::invalid_argument("operator parameter p must be >= 0");
}

/// Shared core of the sampling operators: c_k = C(m,k) f(sample(k)).
template <typename SampleAt>
BernsteinPoly sampled_operator(int m, const FunctionInput& f,
                               SampleAt&& sample) {
  validate(f);
  std::vector<Scalar> c(m + 1);
  for (int k = 0; k <= m; ++k)
    c[k] = Scalar(binom(m, k)) * value_at(f, sample(k));
  return BernsteinPoly(std::move(c));
}

BernsteinPoly averaged_operator(int m, int pieces_den, int prefactor,
                                const FunctionInput& f) {
  validate(f);
  std::vector<Scalar> c(m + 1);
  for (int k = 0; k <= m; ++k) {
    const BigRational lo(k, pieces_den);
    const BigRational hi(k + 1, pieces_den);
    c[k] = Scalar(BigInt(prefactor) * binom(m, k)) * integrate(f, lo, hi);
  }
  return BernsteinPoly(std::move(c));
}

} // namespace

BernsteinPoly apply_bernstein(int n, const FunctionInput& f) {
  require_n(n);
  return sampled_operator(n, f,
                          [n](int k) { return BigRational(k, n); });
}

BernsteinPoly apply_stancu(int n, const BigRational& a, const BigRational& b,
                           const FunctionInput& f) {
  require_n(n);
  if (a < 0 || a > b)
    throw std::invalid_argument("stancu parameters require 0 <= a <= b");
  return sampled_operator(
      n, f, [&](int k) { return (BigRational(k) + a) / (BigRational(n) + b); });
}

BernsteinPoly apply_kantorovich(int n, const FunctionInput& f) {
  require_n(n);
  return averaged_operator(n, n + 1, n + 1, f);
}

BernsteinPoly apply_bernstein_schurer(int n, int p, const FunctionInput& f) {
  require_n(n);
  require_p(p);
  return sampled_operator(n + p, f,
                          [n](int k) { return BigRational(k, n); });
}

BernsteinPoly apply_kantorovich_schurer(int n, int p, const FunctionInput& f,
                                        KsDenominator denominator) {
  require_n(n);
  require_p(p);
  const int pieces_den =
      denominator == KsDenominator::printed ? n + 1 : n + p + 1;
  return averaged_operator(n + p, pieces_den, n + p + 1, f);
}

namespace {

double value_at_double(const FunctionInput& f, const BigRational& x) {
  return value_at(f, x).real();
}

int default_szasz_truncation(double lambda) {
  return std::max(64, static_cast<int>(std::ceil(8.0 * lambda)));
}

/// Upper estimate of the dropped Poisson mass times the function scale.
/// `growth` compensates polynomial growth of |f| past the cut.
double szasz_tail_bound(double lambda, int truncation, double scale,
                        double growth) {
  if (lambda == 0.0)
    return 0.0;
  const double log_first = -lambda + (truncation + 1) * std::log(lambda) -
                           std::lgamma(truncation + 2.0);
  const double ratio = growth * lambda / (truncation + 2.0);
  if (ratio >= 1.0)
    return std::numeric_limits<double>::infinity();
  return scale * std::exp(log_first) / (1.0 - ratio);
}

} // namespace

SzaszResult apply_szasz(int n, const FunctionInput& f, double x,
                        std::optional<int> truncation) {
  require_n(n);
  validate(f);
  if (x < 0.0)
    throw std::invalid_argument("apply_szasz: x must be nonnegative");
  if (std::holds_alternative<StepFunction>(f))
    throw std::invalid_argument("apply_szasz: step inputs not supported");

  const double lambda = n * x;
  const int J = truncation ? *truncation : default_szasz_truncation(lambda);
  if (J < 1)
    throw std::invalid_argument("apply_szasz: truncation must be >= 1");

  const bool is_grid = std::holds_alternative<GridFunction>(f);
  int poly_degree = 0;
  if (const auto* t = std::get_if<TaylorFunction>(&f))
    poly_degree = std::max<int>(0, static_cast<int>(t->coeffs.size()) - 1);
  else if (const auto* p = std::get_if<MonomialPoly>(&f))
    poly_degree = p->degree();

  double value = 0.0;
  double max_abs_sample = 0.0;
  if (lambda == 0.0) {
    value = value_at_double(f, BigRational(0));
    return {value, 0.0, J};
  }

  // Poisson weights by recurrence; switch to log space if exp(-lambda)
  // would underflow.
  const bool log_space = lambda > 700.0;
  double w = log_space ? 0.0 : std::exp(-lambda);
  for (int j = 0; j <= J; ++j) {
    const double wj =
        log_space
            ? std::exp(-lambda + j * std::log(lambda) - std::lgamma(j + 1.0))
            : w;
    const double fj = value_at_double(f, BigRational(j, n));
    max_abs_sample = std::max(max_abs_sample, std::abs(fj));
    value += wj * fj;
    if (!log_space)
      w *= lambda / (j + 1);
  }

  double scale, growth;
  if (is_grid) {
    scale = max_abs_sample;
    growth = 1.0;
  } else {
    scale = std::abs(value_at_double(f, BigRational(J + 1, n)));
    growth = std::pow((J + 2.0) / (J + 1.0), poly_degree);
  }
  const double tail = szasz_tail_bound(lambda, J, std::max(scale, 1.0), growth);
  if (!(tail <= 1e-12))
    throw std::invalid_argument(
        "apply_szasz: truncation too small for tail tolerance 1e-12");
  return {value, tail, J};
}

namespace {

double adaptive_simpson(const std::function<double(double)>& g, double a,
                        double b, double fa, double fm, double fb,
                        double whole, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = g(lm), frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(g, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

double integrate_adaptive(const std::function<double(double)>& g, double a,
                          double b, double eps) {
  const double fa = g(a), fb = g(b), fm = g(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(g, a, b, fa, fm, fb, whole, eps, 40);
}

} // namespace

Scalar apply_beta(int n, const FunctionInput& f, const Scalar& x) {
  require_n(n);
  validate(f);
  if (!x.is_real() || x.real() < 0.0 || x.real() > 1.0)
    throw std::invalid_argument("apply_beta: x must be real in [0,1]");

  const std::vector<Scalar>* coeffs = nullptr;
  if (const auto* t = std::get_if<TaylorFunction>(&f))
    coeffs = &t->coeffs;
  else if (const auto* p = std::get_if<MonomialPoly>(&f))
    coeffs = &p->coeffs;

  if (coeffs != nullptr) {
    // Moment of e_j: prod_{i=0}^{j-1} (nx+1+i)/(n+2+i).
    if (x.exact()) {
      const BigRational nx = BigRational(n) * x.exact_value().re;
      Scalar acc;
      BigRational moment = 1;
      for (size_t j = 0; j < coeffs->size(); ++j) {
        if (j > 0)
          moment *= (nx + BigRational(static_cast<int>(j))) /
                    BigRational(n + 1 + static_cast<int>(j));
        acc = acc + (*coeffs)[j] * Scalar(moment);
      }
      return acc;
    }
    const double nx = n * x.real();
    std::complex<double> acc = 0.0;
    double moment = 1.0;
    for (size_t j = 0; j < coeffs->size(); ++j) {
      if (j > 0)
        moment *= (nx + static_cast<double>(j)) /
                  static_cast<double>(n + 1 + static_cast<int>(j));
      acc += (*coeffs)[j].value() * moment;
    }
    return Scalar(acc);
  }

  const auto* g = std::get_if<GridFunction>(&f);
  if (g == nullptr)
    throw std::invalid_argument(
        "apply_beta: polynomial or grid input required");
  if (g->nodes.front() > 0 || g->nodes.back() < 1)
    throw std::invalid_argument("apply_beta: grid must cover [0,1]");

  // Quadrature fallback: weight t^{nx} (1-t)^{n(1-x)} against the
  // piecewise-linear interpolant, split at the grid nodes.
  const double xr = x.real();
  const double ea = n * xr, eb = n * (1.0 - xr);
  const auto weight = [&](double t) {
    return std::pow(t, ea) * std::pow(1.0 - t, eb);
  };
  std::vector<double> nodes_d(g->nodes.size());
  std::vector<double> values_d(g->values.size());
  for (size_t i = 0; i < g->nodes.size(); ++i) {
    nodes_d[i] = to_double(g->nodes[i]);
    values_d[i] = g->values[i].real();
  }
  double numerator = 0.0, denominator_v = 0.0;
  for (size_t i = 0; i + 1 < nodes_d.size(); ++i) {
    const double lo = std::max(nodes_d[i], 0.0);
    const double hi = std::min(nodes_d[i + 1], 1.0);
    if (lo >= hi)
      continue;
    const auto interp = [&](double t) {
      const double u = (t - nodes_d[i]) / (nodes_d[i + 1] - nodes_d[i]);
      return values_d[i] + u * (values_d[i + 1] - values_d[i]);
    };
    numerator += integrate_adaptive(
        [&](double t) { return weight(t) * interp(t); }, lo, hi, 1e-13);
    denominator_v += integrate_adaptive(weight, lo, hi, 1e-13);
  }
  return Scalar(numerator / denominator_v);
}

MonomialPoly apply_lorentz(int n, const FunctionInput& f) {
  require_n(n);
  validate(f);
  const std::vector<Scalar>* coeffs = nullptr;
  if (const auto* t = std::get_if<TaylorFunction>(&f))
    coeffs = &t->coeffs;
  else if (const auto* p = std::get_if<MonomialPoly>(&f))
    coeffs = &p->coeffs;
  if (coeffs == nullptr)
    throw std::invalid_argument("apply_lorentz: Taylor coefficients required");

  const int out_degree =
      std::min<int>(n, std::max<int>(0, static_cast<int>(coeffs->size()) - 1));
  std::vector<Scalar> out(out_degree + 1);
  for (int j = 0; j <= out_degree && j < static_cast<int>(coeffs->size()); ++j)
    out[j] = (*coeffs)[j] * Scalar(lorentz_eigenvalue(n, j));
  return MonomialPoly(std::move(out));
}

BigRational lorentz_eigenvalue(int n, int j) {
  require_n(n);
  if (j < 0)
    throw std::invalid_argument("lorentz_eigenvalue: j must be >= 0");
  if (j > n)
    return 0; // the factor (1 - n/n) enters from j = n+1 on
  BigRational lambda = 1;
  for (int i = 1; i <= j - 1; ++i)
    lambda *= BigRational(n - i, n);
  return lambda;
}

} // namespace huslab
