#include "lrd/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrd/errors.hpp"
#include "lrd/svd.hpp"
#include "lrd/tensor3.hpp"

namespace lrd::estimators {

using tensor::Dims3;
using tensor::matricize;
using tensor::mode_product;
using tensor::Tensor3;
using tensor::TuckerDecomposition;

namespace {

void check_ranks(const Dims3& dims, TargetRanks ranks) {
  const std::int64_t r[] = {ranks.r1, ranks.r2, ranks.r3};
  for (int k = 0; k < 3; ++k) {
    if (r[k] < 1 || r[k] > dims[static_cast<std::size_t>(k)]) {
      throw ParameterError("target rank r" + std::to_string(k + 1) + "=" + std::to_string(r[k]) +
                           " out of range for dim " +
                           std::to_string(dims[static_cast<std::size_t>(k)]));
    }
  }
}

linalg::Subspace leading_left_subspace(const Tensor3& x, int mode, std::int64_t r) {
  if (r == x.dim(mode - 1)) return linalg::Subspace::identity(r);
  const Matrix unfolding = matricize(x, mode);
  const std::int64_t available = std::min(unfolding.rows(), unfolding.cols());
  if (r <= available) {
    return linalg::Subspace(linalg::leading_left_singular_vectors(unfolding, r));
  }
  // The unfolding cannot carry r singular vectors (an inadmissible rank
  // request, or a compressed stage-1 unfolding narrower than r). Keep every
  // available one and complete the basis from the orthogonal complement.
  linalg::Subspace head(linalg::leading_left_singular_vectors(unfolding, available));
  const Matrix tail = linalg::orthogonal_complement(head);
  Matrix basis(unfolding.rows(), r);
  basis.leftCols(available) = head.basis;
  basis.rightCols(r - available) = tail.leftCols(r - available);
  return linalg::Subspace(std::move(basis));
}

// Y compressed along the two modes other than `mode` by the given factors;
// its mode-`mode` unfolding equals matricize(Y, mode) · (U_a ⊗ U_b) with
// (a, b) the cyclic pair the algorithm prescribes.
Tensor3 compress_other_modes(const Tensor3& y, int mode,
                             const std::array<linalg::Subspace, 3>& u) {
  static constexpr int pairs[3][2] = {{2, 3}, {1, 3}, {1, 2}};
  const int a = pairs[mode - 1][0];
  const int b = pairs[mode - 1][1];
  Tensor3 out = mode_product(y, a, Matrix(u[static_cast<std::size_t>(a - 1)].basis.transpose()));
  return mode_product(out, b, Matrix(u[static_cast<std::size_t>(b - 1)].basis.transpose()));
}

// Tail sum Σ_{i>r} σ_i², accumulated smallest-first.
double tail_norm(const Vector& sigma, std::int64_t r) {
  double acc = 0.0;
  for (Eigen::Index i = sigma.size() - 1; i >= r; --i) acc += sigma(i) * sigma(i);
  return std::sqrt(acc);
}

std::array<linalg::Subspace, 3> stage0_factors(const Tensor3& x, TargetRanks ranks) {
  const std::int64_t r[] = {ranks.r1, ranks.r2, ranks.r3};
  return {leading_left_subspace(x, 1, r[0]), leading_left_subspace(x, 2, r[1]),
          leading_left_subspace(x, 3, r[2])};
}

TuckerDecomposition project_to_factors(const Tensor3& x,
                                       const std::array<linalg::Subspace, 3>& u) {
  Tensor3 core = mode_product(x, 1, Matrix(u[0].basis.transpose()));
  core = mode_product(core, 2, Matrix(u[1].basis.transpose()));
  core = mode_product(core, 3, Matrix(u[2].basis.transpose()));
  return TuckerDecomposition(std::move(core), u);
}

}  // namespace

OneStepHosvdResult one_step_hosvd(const Tensor3& y, TargetRanks ranks) {
  check_ranks(y.dims(), ranks);
  const std::int64_t r[] = {ranks.r1, ranks.r2, ranks.r3};

  std::array<linalg::Subspace, 3> u0 = stage0_factors(y, ranks);

  std::array<linalg::Subspace, 3> u1 = u0;
  for (int mode = 1; mode <= 3; ++mode) {
    if (r[mode - 1] == y.dim(mode - 1)) continue;  // identity factor stays
    const Tensor3 compressed = compress_other_modes(y, mode, u0);
    u1[static_cast<std::size_t>(mode - 1)] = leading_left_subspace(compressed, mode, r[mode - 1]);
  }

  TuckerDecomposition decomposition = project_to_factors(y, u1);
  Tensor3 estimate = tucker_reconstruct(decomposition);
  return {std::move(estimate), std::move(decomposition), std::move(u0), std::move(u1)};
}

Matrix truncated_svd_estimate(const Matrix& y, std::int64_t r) {
  const std::int64_t smax = std::min(y.rows(), y.cols());
  if (r < 1 || r > smax) {
    throw ParameterError("truncated_svd_estimate: rank out of range");
  }
  if (r == smax) return y;  // full-rank truncation is the identity
  return linalg::truncated_svd(y, r).reconstruct();
}

BiasBracket matrix_bias(const Vector& sigma, std::int64_t r) {
  if (r < 0) throw ParameterError("matrix_bias: negative rank");
  for (Eigen::Index i = 1; i < sigma.size(); ++i) {
    if (sigma(i) > sigma(i - 1) + 1e-12 * std::max(1.0, sigma(0))) {
      throw ParameterError("matrix_bias: sigma not nonincreasing");
    }
  }
  const double xi = (r >= sigma.size()) ? 0.0 : tail_norm(sigma, r);
  return {xi, xi};
}

tensor::Tensor3 hosvd_truncate(const Tensor3& x, TargetRanks ranks) {
  check_ranks(x.dims(), ranks);
  return tucker_reconstruct(project_to_factors(x, stage0_factors(x, ranks)));
}

BiasBracket tucker_bias_bracket(const Tensor3& x, TargetRanks ranks) {
  check_ranks(x.dims(), ranks);
  const std::int64_t r[] = {ranks.r1, ranks.r2, ranks.r3};
  double lower = 0.0;
  for (int mode = 1; mode <= 3; ++mode) {
    const Vector sigma = linalg::singular_values(matricize(x, mode));
    lower = std::max(lower, tail_norm(sigma, r[mode - 1]));
  }
  const double upper = (x - hosvd_truncate(x, ranks)).frobenius_norm();
  return {lower, upper};
}

HooiResult hooi_refine(const Tensor3& x, TargetRanks ranks, int max_iters, double tol) {
  check_ranks(x.dims(), ranks);
  if (max_iters < 1) throw ParameterError("hooi_refine: max_iters must be >= 1");
  const std::int64_t r[] = {ranks.r1, ranks.r2, ranks.r3};

  std::array<linalg::Subspace, 3> u = stage0_factors(x, ranks);
  auto error_of = [&x](const std::array<linalg::Subspace, 3>& f) {
    return (x - tucker_reconstruct(project_to_factors(x, f))).frobenius_norm();
  };

  std::vector<double> trace{error_of(u)};
  for (int it = 2; it <= max_iters; ++it) {
    for (int mode = 1; mode <= 3; ++mode) {
      if (r[mode - 1] == x.dim(mode - 1)) continue;
      const Tensor3 compressed = compress_other_modes(x, mode, u);
      u[static_cast<std::size_t>(mode - 1)] =
          leading_left_subspace(compressed, mode, r[mode - 1]);
    }
    const double err = error_of(u);
    const double prev = trace.back();
    trace.push_back(err);
    if (prev - err <= tol * std::max(prev, 1e-300)) break;  // converged or non-improving
  }
  TuckerDecomposition decomposition = project_to_factors(x, u);
  const double achieved = trace.back();
  return {std::move(decomposition), achieved, std::move(trace)};
}

SampleCovResult sample_cov_truncated(const Matrix& samples, std::int64_t r) {
  const std::int64_t n_samples = samples.rows();
  const std::int64_t n = samples.cols();
  if (n_samples < 1) throw ParameterError("sample_cov_truncated: need at least one sample");
  if (r < 1 || r > n) throw ParameterError("sample_cov_truncated: rank out of range");
  require_finite(samples, "sample_cov_truncated");
  Matrix cov = (samples.transpose() * samples) / static_cast<double>(n_samples);
  cov = ((cov + Matrix(cov.transpose())) * 0.5).eval();
  Matrix estimate =
      (r == n) ? cov : Matrix(linalg::truncated_svd(cov, r).reconstruct());
  if (r != n) estimate = ((estimate + Matrix(estimate.transpose())) * 0.5).eval();
  return {std::move(estimate), std::move(cov)};
}

}  // namespace lrd::estimators
