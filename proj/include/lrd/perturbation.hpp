#ifndef LRD_PERTURBATION_HPP
#define LRD_PERTURBATION_HPP

#include <cstdint>

#include "lrd/matrix.hpp"

namespace lrd::linalg {

/// Slacks of the classical singular-value perturbation inequalities,
/// evaluated on a concrete (A, B) pair. Every slack is ≥ 0 when the
/// inequality holds; anything below -1e-9 marks a violation.
struct PerturbationReport {
  /// ‖A-B‖_F - ‖Σ(A)-Σ(B)‖_F and the spectral-norm analogue.
  double mirsky_frobenius_slack;
  double mirsky_spectral_slack;
  /// min over the i = j pairs with 2i-1 ≤ min(m,n) of
  /// σ_i(A)+σ_i(B)-σ_{2i-1}(A+B).
  double weyl_min_slack;
  /// sqrt(Σ_{i≤k} σ_i²(A)) + sqrt(Σ_{i≤k} σ_i²(B)) - sqrt(Σ_{i≤k} σ_i²(A+B)).
  double kyfan_slack;

  double min_slack() const;
  bool holds(double tolerance = -1e-9) const { return min_slack() >= tolerance; }
};

/// A and B must share a shape; k ≤ min(dims) selects the Ky Fan prefix.
PerturbationReport perturbation_inequalities_report(const Matrix& a, const Matrix& b,
                                                    std::int64_t k);

}  // namespace lrd::linalg

#endif  // LRD_PERTURBATION_HPP
