#ifndef LRD_SUBSPACE_HPP
#define LRD_SUBSPACE_HPP

#include <cstdint>

#include "lrd/matrix.hpp"

namespace lrd::linalg {

/// A linear subspace of R^ambient_dim carried by an orthonormal basis.
struct Subspace {
  Matrix basis;  ///< ambient_dim × rank, orthonormal columns

  explicit Subspace(Matrix b);

  std::int64_t ambient_dim() const { return basis.rows(); }
  std::int64_t rank() const { return basis.cols(); }

  static Subspace identity(std::int64_t dim);
};

struct SinTheta {
  double spectral;   ///< in [0, 1]
  double frobenius;  ///< in [0, sqrt(rank)]
};

/// Principal-angle distances between two subspaces of equal ambient dim and
/// rank: spectral = sqrt(1 - σ_min²(UᵀV)), frobenius = sqrt(rank - ‖UᵀV‖_F²).
SinTheta sin_theta(const Subspace& u, const Subspace& v);

/// Orthonormal basis of the orthogonal complement (ambient × (ambient-rank)).
Matrix orthogonal_complement(const Subspace& u);

/// Haar-distributed orthonormal p×r basis: i.i.d. standard Gaussian entries
/// (drawn row-major from the counter stream of `seed`), orthonormalized by
/// Gram-Schmidt with the triangular factor's diagonal kept positive.
/// Deterministic per seed.
Subspace random_orthonormal(std::int64_t p, std::int64_t r, std::uint64_t seed);

}  // namespace lrd::linalg

#endif  // LRD_SUBSPACE_HPP
