#pragma once

#include "huslab/norms.hpp"
#include "huslab/operators.hpp"

#include <cstdint>
#include <optional>

namespace huslab {

enum class StabilityStatus {
  stable,
  unstable,
  unstable_cited, // recorded from published results without new evidence
};

std::string status_name(StabilityStatus status);

enum class NormKind { interval, disk };

/// Extremal witness data: the shifted Chebyshev polynomial attains the
/// closed-form constant exactly, turning the sampled lower bound into an
/// equality check.
struct Certificate {
  BernsteinPoly extremal;
  BigRational attained; // exact weighted maximum; equals K_exact
  double norm_check = 0.0;
};

struct StabilityReport {
  OperatorSpec op;
  StabilityStatus status = StabilityStatus::stable;
  std::optional<BigRational> K_exact;
  std::optional<double> K_float;
  std::optional<double> empirical_lower_bound;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
};

struct StabilityOptions {
  NormKind norm = NormKind::interval;
  double radius = 1.0; // disk norm only
  KsDenominator ks_denominator = KsDenominator::printed;
};

/// Closed-form constant and certificate for the stable kinds; instability
/// statuses for the others. The certificate norm and the derived lower bound
/// use the interval norm unless opts selects the (exploratory) disk norm.
StabilityReport closed_K(const OperatorSpec& op,
                         const StabilityOptions& opts = {});

/// Grid preimage f_q with f_q(k/n) = c_k(q)/C(n+p,k); the degree-(n+p)
/// sampling operator maps it back to q exactly.
GridFunction preimage_bs(int n, int p, const BernsteinPoly& q);

/// Step preimage with value (n+1) c_k(q) / ((n+p+1) C(n+p,k)) on
/// [k/(n+1), (k+1)/(n+1)); the averaging operator maps it back to q exactly.
StepFunction preimage_ks(int n, int p, const BernsteinPoly& q);

struct EmpiricalResult {
  double lower_bound = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool certificate_included = false;
  BernsteinPoly best_witness;
  double best_preimage_sup = 0.0; // preimage sup value of the best witness
  double best_norm = 0.0;         // norm of the best witness
};

/// Sampled lower bound for the inverse norm of bernstein_schurer or
/// kantorovich_schurer: max over random unit-norm q of the preimage sup.
/// Reported strictly as a lower bound; the certificate witness, when
/// included, attains the closed form exactly.
EmpiricalResult empirical_inverse_norm(const OperatorSpec& op, int trials,
                                       std::uint64_t seed,
                                       bool include_certificate,
                                       const StabilityOptions& opts = {});

struct LorentzSpectrumRow {
  int j = 0;
  BigRational eigenvalue;
  bool reciprocal_finite = false;
  BigRational reciprocal; // meaningful only when finite
};

struct LorentzInstabilityReport {
  int n = 0;
  std::vector<LorentzSpectrumRow> rows; // j = 0..n+1
  BigRational max_finite_reciprocal;    // n^{n-1}/(n-1)!, attained at j = n
  int argmax_j = 0;
  std::string kernel_witness;
  std::vector<std::string> notes;
};

/// Eigenvalue table with reciprocals, the kernel witness e_{n+1}, and the
/// unbounded-growth note. Requires n >= 2.
LorentzInstabilityReport lorentz_instability_report(int n);

} // namespace huslab
