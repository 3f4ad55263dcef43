#include "lrd/subspace.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "lrd/errors.hpp"
#include "lrd/rng.hpp"
#include "lrd/svd.hpp"
#include "lrd/tolerances.hpp"

namespace lrd::linalg {

Subspace::Subspace(Matrix b) : basis(std::move(b)) {
  if (basis.rows() <= 0 || basis.cols() <= 0) {
    throw ParameterError("Subspace: dims must be positive");
  }
  if (basis.cols() > basis.rows()) {
    throw ParameterError("Subspace: rank exceeds ambient dimension");
  }
  require_finite(basis, "Subspace");
  Matrix gram = basis.transpose() * basis;
  gram.diagonal().array() -= 1.0;
  if (gram.cwiseAbs().maxCoeff() > Tolerances::standard().orthonormality) {
    throw ParameterError("Subspace: basis columns not orthonormal");
  }
}

Subspace Subspace::identity(std::int64_t dim) { return Subspace(Matrix::Identity(dim, dim)); }

SinTheta sin_theta(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.rank() != v.rank()) {
    throw ParameterError("sin_theta: subspaces must share ambient dim and rank");
  }
  const Matrix overlap = u.basis.transpose() * v.basis;  // rank × rank
  const Vector sv = singular_values(overlap);
  const double smin = sv(sv.size() - 1);
  const double spectral = std::sqrt(std::max(0.0, 1.0 - smin * smin));
  const double fro2 = overlap.squaredNorm();
  const double frobenius = std::sqrt(std::max(0.0, static_cast<double>(u.rank()) - fro2));
  return {spectral, frobenius};
}

Matrix orthogonal_complement(const Subspace& u) {
  const std::int64_t p = u.ambient_dim();
  const std::int64_t r = u.rank();
  if (r == p) return Matrix(p, 0);
  // Full QR of the basis; trailing columns of Q span the complement.
  Eigen::HouseholderQR<Matrix> qr(u.basis);
  Matrix q = qr.householderQ() * Matrix::Identity(p, p);
  return q.rightCols(p - r);
}

Subspace random_orthonormal(std::int64_t p, std::int64_t r, std::uint64_t seed) {
  if (p <= 0 || r <= 0) throw ParameterError("random_orthonormal: dims must be positive");
  if (r > p) throw ParameterError("random_orthonormal: r > p");
  rng::CounterRng gen(rng::stream_key(seed, "orthonormal"));
  Matrix g(p, r);
  for (std::int64_t i = 0; i < p; ++i) {
    for (std::int64_t j = 0; j < r; ++j) {
      g(i, j) = gen.next_gaussian();
    }
  }
  // Modified Gram-Schmidt with one re-orthogonalization pass. The pivots
  // (diagonal of R) are norms, hence positive, which is the Haar convention.
  Matrix q(p, r);
  for (std::int64_t j = 0; j < r; ++j) {
    Vector v = g.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::int64_t i = 0; i < j; ++i) {
        v -= (q.col(i).dot(v)) * q.col(i);
      }
    }
    const double norm = v.norm();
    if (norm < 1e-300) {
      throw ParameterError("random_orthonormal: degenerate Gaussian draw");
    }
    q.col(j) = v / norm;
  }
  return Subspace(std::move(q));
}

}  // namespace lrd::linalg
