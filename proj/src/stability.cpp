#include "huslab/stability.hpp"

#include "huslab/rng.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace huslab {

std::string status_name(StabilityStatus status) {
  switch (status) {
  case StabilityStatus::stable:
    return "stable";
  case StabilityStatus::unstable:
    return "unstable";
  case StabilityStatus::unstable_cited:
    return "unstable_cited";
  }
  throw std::logic_error("status_name: unknown status");
}

namespace {

/// Brute maximum of the weighted coefficient magnitudes of the Chebyshev
/// witness; equals the closed-form constant via the peak-index analysis.
BigRational witness_attained(OperatorKind kind, int n, int p,
                             KsDenominator ks_den) {
  const int m =
      (kind == OperatorKind::bernstein_schurer ||
       kind == OperatorKind::kantorovich_schurer)
          ? n + p
          : n;
  BigRational best = 0;
  for (int k = 0; k <= m; ++k) {
    BigRational value(d_coeff_closed(m, k));
    if (kind != OperatorKind::bernstein)
      value /= BigRational(binom(m, k));
    if (value > best)
      best = value;
  }
  if (kind == OperatorKind::kantorovich_schurer &&
      ks_den == KsDenominator::printed)
    best *= BigRational(n + 1, n + p + 1);
  return best;
}

BigRational closed_constant(OperatorKind kind, int n, int p,
                            KsDenominator ks_den) {
  switch (kind) {
  case OperatorKind::bernstein:
    return BigRational(d_coeff_closed(n, n / 2));
  case OperatorKind::stancu:
  case OperatorKind::kantorovich:
    return BigRational(d_coeff_closed(n, n / 2), binom(n, n / 2));
  case OperatorKind::bernstein_schurer: {
    const int m = n + p;
    return BigRational(d_coeff_closed(m, m / 2), binom(m, m / 2));
  }
  case OperatorKind::kantorovich_schurer: {
    const int m = n + p;
    BigRational k(d_coeff_closed(m, m / 2), binom(m, m / 2));
    if (ks_den == KsDenominator::printed)
      k *= BigRational(n + 1, m + 1);
    return k;
  }
  default:
    throw std::logic_error("closed_constant: operator is not stable");
  }
}

double witness_norm(const BernsteinPoly& witness, NormKind norm,
                    double radius) {
  if (norm == NormKind::interval)
    return sup_norm_interval(witness).value;
  return sup_norm_disk(witness, DiskDomain{radius}).value;
}

std::string float_str(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

} // namespace

StabilityReport closed_K(const OperatorSpec& op, const StabilityOptions& opts) {
  validate(op);
  StabilityReport report;
  report.op = op;

  switch (op.kind) {
  case OperatorKind::szasz_mirakjan:
  case OperatorKind::beta:
    report.status = StabilityStatus::unstable_cited;
    report.notes.push_back(
        "instability established in published work; recorded as a status "
        "only, no numeric evidence is generated here");
    return report;
  case OperatorKind::lorentz:
    report.status = StabilityStatus::unstable;
    report.notes.push_back(
        "eigenvalue reciprocals 1/lambda_j grow without bound; see the "
        "instability report for the spectrum table");
    return report;
  default:
    break;
  }

  report.status = StabilityStatus::stable;
  report.K_exact = closed_constant(op.kind, op.n, op.p, opts.ks_denominator);
  report.K_float = to_double(*report.K_exact);

  const int m = (op.kind == OperatorKind::bernstein_schurer ||
                 op.kind == OperatorKind::kantorovich_schurer)
                    ? op.n + op.p
                    : op.n;
  Certificate cert;
  cert.extremal = chebyshev_bernstein(m);
  cert.attained = witness_attained(op.kind, op.n, op.p, opts.ks_denominator);
  cert.norm_check = witness_norm(cert.extremal, opts.norm, opts.radius);
  report.empirical_lower_bound =
      to_double(cert.attained) / cert.norm_check;
  report.certificate = std::move(cert);

  if (op.kind == OperatorKind::bernstein) {
    const BigRational schurer_value(d_coeff_closed(op.n, op.n / 2),
                                    binom(op.n, op.n / 2));
    report.notes.push_back(
        "published constant " + rational_string(*report.K_exact) +
        " for this operator differs from the value " +
        rational_string(schurer_value) +
        " published for the identical a=b=0 Stancu operator (and reached by "
        "the p=0 Schurer family); both are reported as published, not "
        "reconciled");
  }
  if (op.kind == OperatorKind::kantorovich_schurer &&
      opts.ks_denominator == KsDenominator::classical) {
    report.notes.push_back(
        "classical subinterval width 1/(n+p+1) selected; the published "
        "constant corresponds to the printed width 1/(n+1)");
  }
  if (opts.norm == NormKind::disk) {
    report.notes.push_back(
        "disk-norm run (exploratory): the constants hold for the interval "
        "norm; the extremal witness has disk norm " +
        float_str(report.certificate->norm_check) + " at radius " +
        float_str(opts.radius) + " rather than 1");
  }
  return report;
}

GridFunction preimage_bs(int n, int p, const BernsteinPoly& q) {
  if (n < 1 || p < 0)
    throw std::invalid_argument("preimage_bs: require n >= 1, p >= 0");
  if (q.degree() != n + p)
    throw std::invalid_argument("preimage_bs: q must have degree n+p");
  GridFunction f;
  for (int k = 0; k <= n + p; ++k) {
    f.nodes.emplace_back(k, n);
    f.values.push_back(q.coeffs[k] / Scalar(binom(n + p, k)));
  }
  return f;
}

StepFunction preimage_ks(int n, int p, const BernsteinPoly& q) {
  if (n < 1 || p < 0)
    throw std::invalid_argument("preimage_ks: require n >= 1, p >= 0");
  if (q.degree() != n + p)
    throw std::invalid_argument("preimage_ks: q must have degree n+p");
  StepFunction f;
  const Scalar scale{BigRational(n + 1, n + p + 1)};
  for (int k = 0; k <= n + p + 1; ++k)
    f.breakpoints.emplace_back(k, n + 1);
  for (int k = 0; k <= n + p; ++k)
    f.values.push_back(q.coeffs[k] * scale / Scalar(binom(n + p, k)));
  return f;
}

namespace {

struct TrialOutcome {
  double value = -1.0;
  std::int64_t index = 0; // -1 marks the certificate entry
  BernsteinPoly witness;
  double preimage_sup = 0.0;
  double norm = 0.0;

  bool better_than(const TrialOutcome& other) const {
    if (value != other.value)
      return value > other.value;
    return index < other.index;
  }
};

} // namespace

EmpiricalResult empirical_inverse_norm(const OperatorSpec& op, int trials,
                                       std::uint64_t seed,
                                       bool include_certificate,
                                       const StabilityOptions& opts) {
  validate(op);
  if (op.kind != OperatorKind::bernstein_schurer &&
      op.kind != OperatorKind::kantorovich_schurer)
    throw std::invalid_argument(
        "empirical_inverse_norm: bernstein_schurer or kantorovich_schurer "
        "required");
  if (trials < 1)
    throw std::invalid_argument("empirical_inverse_norm: trials must be >= 1");

  const int m = op.n + op.p;
  const bool is_ks = op.kind == OperatorKind::kantorovich_schurer;
  const double factor =
      is_ks && opts.ks_denominator == KsDenominator::printed
          ? static_cast<double>(op.n + 1) / static_cast<double>(m + 1)
          : 1.0;
  std::vector<double> binoms(m + 1);
  for (int k = 0; k <= m; ++k)
    binoms[k] = static_cast<double>(binom(m, k));

  const auto norm_of_mono = [&](const MonomialPoly& poly) {
    return opts.norm == NormKind::interval
               ? sup_norm_interval(poly).value
               : sup_norm_disk(poly, DiskDomain{opts.radius}).value;
  };

  const auto preimage_sup_of = [&](const BernsteinPoly& q) {
    double sup = 0.0;
    for (int k = 0; k <= m; ++k)
      sup = std::max(sup, q.coeffs[k].abs() / binoms[k]);
    return factor * sup;
  };

  const std::uint64_t stream = 2000 + static_cast<std::uint64_t>(op.kind);
  const auto run_trial = [&](std::int64_t t) {
    Rng rng = trial_rng(seed, stream, static_cast<std::uint64_t>(t));
    std::vector<Scalar> coeffs(m + 1);
    for (auto& c : coeffs)
      c = Scalar(BigRational(rng.uniform_int(-1000, 1000), 1000));
    const MonomialPoly sample(coeffs);
    TrialOutcome out;
    out.index = t;
    out.norm = norm_of_mono(sample);
    if (out.norm <= 0.0)
      return out; // zero polynomial drawn; contributes nothing
    out.witness = to_bernstein(sample, m);
    out.preimage_sup = preimage_sup_of(out.witness);
    out.value = out.preimage_sup / out.norm;
    return out;
  };

  TrialOutcome best;
  if (include_certificate) {
    TrialOutcome cert;
    cert.index = -1;
    cert.witness = chebyshev_bernstein(m);
    cert.norm = opts.norm == NormKind::interval
                    ? sup_norm_interval(cert.witness).value
                    : sup_norm_disk(cert.witness, DiskDomain{opts.radius}).value;
    cert.preimage_sup = preimage_sup_of(cert.witness);
    cert.value = cert.preimage_sup / cert.norm;
    best = cert;
  }

  // Trials are independently seeded, so sharding them across workers and
  // merging by maximum is deterministic regardless of the partition.
  const unsigned hw = std::thread::hardware_concurrency();
  const int shards =
      std::max(1, std::min<int>(trials, std::min<unsigned>(hw ? hw : 1, 8)));
  std::vector<std::future<TrialOutcome>> futures;
  futures.reserve(shards);
  for (int s = 0; s < shards; ++s) {
    futures.push_back(std::async(std::launch::async, [&, s] {
      TrialOutcome local;
      for (std::int64_t t = s; t < trials; t += shards) {
        TrialOutcome out = run_trial(t);
        if (out.better_than(local))
          local = out;
      }
      return local;
    }));
  }
  for (auto& fut : futures) {
    TrialOutcome out = fut.get();
    if (out.better_than(best))
      best = out;
  }

  EmpiricalResult result;
  result.lower_bound = std::max(best.value, 0.0);
  result.trials = trials;
  result.seed = seed;
  result.certificate_included = include_certificate;
  result.best_witness = best.witness;
  result.best_preimage_sup = best.preimage_sup;
  result.best_norm = best.norm;
  return result;
}

LorentzInstabilityReport lorentz_instability_report(int n) {
  if (n < 2)
    throw std::invalid_argument(
        "lorentz_instability_report: n >= 2 required (n = 1 annihilates "
        "every e_j with j >= 2 immediately)");
  LorentzInstabilityReport report;
  report.n = n;
  report.max_finite_reciprocal = 0;
  for (int j = 0; j <= n + 1; ++j) {
    LorentzSpectrumRow row;
    row.j = j;
    row.eigenvalue = lorentz_eigenvalue(n, j);
    row.reciprocal_finite = row.eigenvalue != 0;
    if (row.reciprocal_finite) {
      row.reciprocal = 1 / row.eigenvalue;
      if (row.reciprocal > report.max_finite_reciprocal) {
        report.max_finite_reciprocal = row.reciprocal;
        report.argmax_j = j;
      }
    }
    report.rows.push_back(std::move(row));
  }
  report.kernel_witness = "e_" + std::to_string(n + 1) +
                          " maps to the zero polynomial";
  report.notes.push_back(
      "the largest finite reciprocal n^(n-1)/(n-1)! = " +
      rational_string(report.max_finite_reciprocal) +
      " grows without bound as n increases, so no stability constant can "
      "hold uniformly");
  report.notes.push_back(
      "every e_j with j > n is annihilated: the operator has a nontrivial "
      "kernel on analytic functions");
  return report;
}

} // namespace huslab
