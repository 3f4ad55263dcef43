#include "lrd/svd.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "lrd/errors.hpp"
#include "lrd/tolerances.hpp"

namespace lrd::linalg {

namespace {

// Largest-magnitude entry of each U column made positive; sign pushed into V.
void canonicalize_signs(Matrix& u, Matrix& v) {
  for (Eigen::Index j = 0; j < u.cols(); ++j) {
    Eigen::Index imax = 0;
    u.col(j).cwiseAbs().maxCoeff(&imax);
    if (u(imax, j) < 0.0) {
      u.col(j) = -u.col(j);
      v.col(j) = -v.col(j);
    }
  }
}

void check_orthonormal(const Matrix& q, const char* what) {
  const double tol = Tolerances::standard().orthonormality;
  Matrix gram = q.transpose() * q;
  gram.diagonal().array() -= 1.0;
  if (gram.cwiseAbs().maxCoeff() > tol) {
    throw ParameterError(std::string(what) + ": columns not orthonormal within tolerance");
  }
}

}  // namespace

SVDFactors::SVDFactors(Matrix u, Vector s, Matrix v)
    : U(std::move(u)), sigma(std::move(s)), V(std::move(v)) {
  if (U.cols() != sigma.size() || V.cols() != sigma.size()) {
    throw ParameterError("SVDFactors: inconsistent factor shapes");
  }
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (!(sigma(i) >= 0.0)) throw ParameterError("SVDFactors: negative or NaN singular value");
    if (i > 0 && sigma(i) > sigma(i - 1) + 1e-12 * std::max(1.0, sigma(0))) {
      throw ParameterError("SVDFactors: singular values not nonincreasing");
    }
  }
  check_orthonormal(U, "SVDFactors U");
  check_orthonormal(V, "SVDFactors V");
}

Matrix SVDFactors::reconstruct() const { return U * sigma.asDiagonal() * V.transpose(); }

SVDFactors svd(const Matrix& m) {
  require_finite(m, "svd");
  Eigen::BDCSVD<Matrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw SvdConvergenceError(m.rows(), m.cols());
  }
  Matrix u = solver.matrixU();
  Matrix v = solver.matrixV();
  Vector s = solver.singularValues();
  canonicalize_signs(u, v);
  return SVDFactors(std::move(u), std::move(s), std::move(v));
}

SVDFactors truncated_svd(const Matrix& m, std::int64_t r) {
  const std::int64_t smax = std::min(m.rows(), m.cols());
  if (r < 1 || r > smax) {
    throw ParameterError("truncated_svd: rank " + std::to_string(r) + " out of range [1, " +
                         std::to_string(smax) + "]");
  }
  SVDFactors full = svd(m);
  return SVDFactors(full.U.leftCols(r), full.sigma.head(r), full.V.leftCols(r));
}

Matrix leading_left_singular_vectors(const Matrix& m, std::int64_t r) {
  const std::int64_t smax = std::min(m.rows(), m.cols());
  if (r < 1 || r > smax) {
    throw ParameterError("leading_left_singular_vectors: rank out of range");
  }
  // Wide unfoldings dominate the workload; their left factors come cheaper
  // from the p×p Gram matrix than from a full bidiagonalization.
  if (m.cols() >= 4 * m.rows()) {
    Matrix gram = m * m.transpose();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(gram);
    if (eig.info() != Eigen::Success) throw SvdConvergenceError(m.rows(), m.cols());
    // Eigenvalues ascend; take the top r columns in descending order.
    Matrix u(m.rows(), r);
    for (std::int64_t j = 0; j < r; ++j) {
      u.col(j) = eig.eigenvectors().col(m.rows() - 1 - j);
    }
    return u;
  }
  Eigen::BDCSVD<Matrix> solver(m, Eigen::ComputeThinU);
  if (solver.info() != Eigen::Success) throw SvdConvergenceError(m.rows(), m.cols());
  return solver.matrixU().leftCols(r);
}

Vector singular_values(const Matrix& m) {
  Eigen::BDCSVD<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw SvdConvergenceError(m.rows(), m.cols());
  return solver.singularValues();
}

}  // namespace lrd::linalg
