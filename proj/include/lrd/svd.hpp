#ifndef LRD_SVD_HPP
#define LRD_SVD_HPP

#include <cstdint>

#include "lrd/matrix.hpp"

namespace lrd::linalg {

/// Full or truncated singular value decomposition M ≈ U·diag(sigma)·Vᵀ.
///
/// Invariants (validated on construction): sigma nonincreasing and ≥ 0,
/// U and V have orthonormal columns. Singular vector signs are canonical:
/// each U column has its largest-magnitude entry positive, with the sign
/// pushed into the matching V column.
struct SVDFactors {
  Matrix U;      ///< p × s
  Vector sigma;  ///< length s, nonincreasing
  Matrix V;      ///< q × s

  SVDFactors(Matrix u, Vector s, Matrix v);

  std::int64_t rank_retained() const { return sigma.size(); }

  /// U·diag(sigma)·Vᵀ.
  Matrix reconstruct() const;
};

/// Full SVD with s = min(rows, cols); zero singular values are retained.
/// Throws SvdConvergenceError if the decomposition fails.
SVDFactors svd(const Matrix& m);

/// Leading r singular triplets, 1 ≤ r ≤ min(rows, cols). σ_r = 0 is allowed;
/// the truncation simply zero-pads.
SVDFactors truncated_svd(const Matrix& m, std::int64_t r);

/// Column basis of the leading-r left singular subspace. Same subspace the
/// full SVD yields, computed by the cheapest route for the given shape
/// (Gram-matrix eigendecomposition for very wide inputs).
Matrix leading_left_singular_vectors(const Matrix& m, std::int64_t r);

/// Singular values only, nonincreasing, length min(rows, cols).
Vector singular_values(const Matrix& m);

}  // namespace lrd::linalg

#endif  // LRD_SVD_HPP
