#include "lrd/kronecker.hpp"

#include "lrd/errors.hpp"

namespace lrd::linalg {

namespace {
constexpr std::int64_t kMaxEntries = std::int64_t(1) << 31;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_finite(a, "kronecker A");
  require_finite(b, "kronecker B");
  const std::int64_t rows = a.rows() * b.rows();
  const std::int64_t cols = a.cols() * b.cols();
  if (rows <= 0 || cols <= 0 || rows > kMaxEntries / cols) {
    throw ParameterError("kronecker: result size overflows the entry budget");
  }
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace lrd::linalg
