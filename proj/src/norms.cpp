#include "huslab/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace huslab {

namespace {

constexpr int kIntervalGridSize = 4096; // 4097 points including endpoints
constexpr int kDiskGridSize = 8192;
constexpr double kAbscissaTol = 1e-12;

struct Probe {
  double x = 0.0;
  double value = -1.0;

  void consider(double xx, double vv) {
    if (vv > value) {
      value = vv;
      x = xx;
    }
  }
};

/// Golden-section maximization of g on [lo,hi]; g need only be unimodal on
/// the bracket, which the grid pass guarantees up to grid resolution.
template <typename F>
Probe golden_max(F&& g, double lo, double hi) {
  static const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  Probe best;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = g(c), fd = g(d);
  best.consider(c, fc);
  best.consider(d, fd);
  while (b - a > kAbscissaTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = g(c);
      best.consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = g(d);
      best.consider(d, fd);
    }
  }
  return best;
}

/// Grid pass plus refinement of every local maximum (endpoints included).
template <typename F>
Probe grid_refine_max(F&& g, const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size()) - 1;
  std::vector<double> vs(n + 1);
  for (int i = 0; i <= n; ++i)
    vs[i] = g(xs[i]);

  Probe best;
  for (int i = 0; i <= n; ++i)
    best.consider(xs[i], vs[i]);

  for (int i = 0; i <= n; ++i) {
    const bool left_ok = (i == 0) || vs[i] >= vs[i - 1];
    const bool right_ok = (i == n) || vs[i] >= vs[i + 1];
    if (!(left_ok && right_ok))
      continue;
    const double lo = xs[i == 0 ? 0 : i - 1];
    const double hi = xs[i == n ? n : i + 1];
    const Probe refined = golden_max(g, lo, hi);
    best.consider(refined.x, refined.value);
  }
  return best;
}

std::vector<double> monomial_real_coeffs(const MonomialPoly& p) {
  std::vector<double> a(p.coeffs.size());
  for (size_t j = 0; j < a.size(); ++j)
    a[j] = p.coeffs[j].real();
  return a;
}

double horner_abs(const std::vector<double>& a, double x) {
  double acc = a.back();
  for (int j = static_cast<int>(a.size()) - 2; j >= 0; --j)
    acc = acc * x + a[j];
  return std::abs(acc);
}

/// Bezier control values b_k = c_k / C(m,k); de Casteljau is then a nested
/// convex combination, stable for x in [0,1] even when the c_k are huge.
std::vector<double> bezier_controls(const BernsteinPoly& p) {
  const int m = p.degree();
  std::vector<double> b(m + 1);
  for (int k = 0; k <= m; ++k)
    b[k] = p.coeffs[k].real() / static_cast<double>(binom(m, k));
  return b;
}

double de_casteljau_abs(const std::vector<double>& controls, double x) {
  std::vector<double> work = controls;
  for (size_t level = work.size() - 1; level > 0; --level)
    for (size_t k = 0; k < level; ++k)
      work[k] = (1.0 - x) * work[k] + x * work[k + 1];
  return std::abs(work[0]);
}

const std::vector<double>& chebyshev_spaced_grid() {
  static const std::vector<double> xs = [] {
    std::vector<double> g(kIntervalGridSize + 1);
    for (int i = 0; i <= kIntervalGridSize; ++i)
      g[i] = 0.5 * (1.0 - std::cos(M_PI * i / kIntervalGridSize));
    g.front() = 0.0;
    g.back() = 1.0;
    return g;
  }();
  return xs;
}

template <typename F>
IntervalNormResult interval_norm(F&& g) {
  const Probe best = grid_refine_max(g, chebyshev_spaced_grid());
  return {best.value, best.x};
}

template <typename Poly>
void require_real(const Poly& p, const char* who) {
  if (!p.real_coefficients(1e-14))
    throw std::invalid_argument(std::string(who) +
                                ": complex-coefficient input");
}

template <typename Poly>
DiskNormResult disk_norm(const Poly& p, DiskDomain d) {
  if (!(d.radius > 0.0))
    throw std::invalid_argument("sup_norm_disk: radius must be positive");
  const auto g = [&](double theta) {
    const std::complex<double> z = std::polar(d.radius, theta);
    return std::abs(eval(p, z));
  };
  // Periodic grid: duplicate one grid cell on each side so that boundary
  // maxima get a proper bracket.
  const double step = 2.0 * M_PI / kDiskGridSize;
  std::vector<double> thetas(kDiskGridSize + 3);
  for (int i = 0; i < kDiskGridSize + 3; ++i)
    thetas[i] = (i - 1) * step;
  const Probe best = grid_refine_max(g, thetas);
  double angle = std::fmod(best.x + 2.0 * M_PI, 2.0 * M_PI);
  return {best.value, angle};
}

} // namespace

IntervalNormResult sup_norm_interval(const MonomialPoly& p) {
  require_real(p, "sup_norm_interval");
  const std::vector<double> a = monomial_real_coeffs(p);
  return interval_norm([&](double x) { return horner_abs(a, x); });
}

IntervalNormResult sup_norm_interval(const BernsteinPoly& p) {
  require_real(p, "sup_norm_interval");
  const std::vector<double> b = bezier_controls(p);
  return interval_norm([&](double x) { return de_casteljau_abs(b, x); });
}

DiskNormResult sup_norm_disk(const MonomialPoly& p, DiskDomain d) {
  return disk_norm(p, d);
}

DiskNormResult sup_norm_disk(const BernsteinPoly& p, DiskDomain d) {
  return disk_norm(p, d);
}

} // namespace huslab
