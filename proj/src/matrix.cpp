#include "lrd/matrix.hpp"

#include <string>

#include "lrd/errors.hpp"
#include "lrd/svd.hpp"

namespace lrd {

void require_finite(const Matrix& m, std::string_view what) {
  if (!m.allFinite()) {
    throw ParameterError(std::string(what) + ": non-finite entries");
  }
}

void require_finite(const Vector& v, std::string_view what) {
  if (!v.allFinite()) {
    throw ParameterError(std::string(what) + ": non-finite entries");
  }
}

Matrix matrix_from_entries(std::int64_t rows, std::int64_t cols,
                           const std::vector<double>& entries) {
  if (rows <= 0 || cols <= 0) {
    throw ParameterError("matrix_from_entries: dims must be positive");
  }
  if (static_cast<std::int64_t>(entries.size()) != rows * cols) {
    throw ParameterError("matrix_from_entries: entries length " +
                         std::to_string(entries.size()) + " does not equal rows*cols");
  }
  Matrix m = Eigen::Map<const Matrix>(entries.data(), rows, cols);
  require_finite(m, "matrix_from_entries");
  return m;
}

namespace linalg {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.isZero(0.0)) return 0.0;
  return singular_values(m)(0);
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

}  // namespace linalg
}  // namespace lrd
