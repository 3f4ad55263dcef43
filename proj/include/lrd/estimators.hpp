#ifndef LRD_ESTIMATORS_HPP
#define LRD_ESTIMATORS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "lrd/matrix.hpp"
#include "lrd/subspace.hpp"
#include "lrd/tucker.hpp"

namespace lrd::estimators {

/// Target Tucker rank of the one-step HOSVD estimator.
struct TargetRanks {
  std::int64_t r1, r2, r3;

  tensor::Dims3 as_dims() const { return {r1, r2, r3}; }
  static TargetRanks cubic(std::int64_t r) { return {r, r, r}; }
};

/// Certified bracket for the best-approximation error ξ. Matrices admit a
/// closed form (lower == upper); tensors get lower from unfolding tails and
/// upper from the HOSVD truncation of the noiseless input.
struct BiasBracket {
  double lower;
  double upper;
};

struct OneStepHosvdResult {
  tensor::Tensor3 estimate;
  tensor::TuckerDecomposition decomposition;
  std::array<linalg::Subspace, 3> stage0;
  std::array<linalg::Subspace, 3> stage1;
};

/// One-step HOSVD: stage 0 takes the leading left singular subspaces of the
/// three unfoldings of Y; stage 1 re-estimates each subspace from the
/// unfolding compressed by the other two stage-0 factors; the output is Y
/// projected onto the stage-1 subspaces along every mode. A mode asking for
/// full rank keeps the identity factor (the projector is the identity
/// either way).
OneStepHosvdResult one_step_hosvd(const tensor::Tensor3& y, TargetRanks ranks);

/// Y_(r): the rank-r truncation of the SVD of Y.
Matrix truncated_svd_estimate(const Matrix& y, std::int64_t r);

/// ξ_(r) = sqrt(Σ_{i>r} σ_i²); exact by Eckart-Young-Mirsky, so
/// lower == upper.
BiasBracket matrix_bias(const Vector& sigma_nonincreasing, std::int64_t r);

/// ξ bracket for a tensor at the given ranks.
BiasBracket tucker_bias_bracket(const tensor::Tensor3& x, TargetRanks ranks);

/// Stage-0 HOSVD truncation of a (noiseless) tensor; its error is the
/// upper half of the bias bracket.
tensor::Tensor3 hosvd_truncate(const tensor::Tensor3& x, TargetRanks ranks);

struct HooiResult {
  tensor::TuckerDecomposition decomposition;
  double achieved_error;
  /// error_trace[0] is the stage-0 truncation error; one entry per iteration.
  std::vector<double> error_trace;
};

/// Alternating refinement of the Tucker factors, started from the stage-0
/// HOSVD of X. Iteration 1 is the initialization itself, so max_iters = 1
/// returns the stage-0 truncation error; each further iteration is one full
/// ALS sweep. Stops early once the relative improvement drops below tol.
HooiResult hooi_refine(const tensor::Tensor3& x, TargetRanks ranks, int max_iters = 25,
                       double tol = 1e-8);

struct SampleCovResult {
  Matrix estimate;    ///< rank-r truncation of the sample covariance, n×n
  Matrix sample_cov;  ///< (1/N) Σ z_k z_kᵀ
};

/// Rows of `samples` are the N observation vectors z_kᵀ.
SampleCovResult sample_cov_truncated(const Matrix& samples, std::int64_t r);

}  // namespace lrd::estimators

#endif  // LRD_ESTIMATORS_HPP
