#ifndef LRD_MATRIX_HPP
#define LRD_MATRIX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string_view>
#include <vector>

namespace lrd {

/// Dense double matrix, row-major storage.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Throws ParameterError if any entry is NaN/Inf.
void require_finite(const Matrix& m, std::string_view what);
void require_finite(const Vector& v, std::string_view what);

/// Builds a rows×cols matrix from row-major entries, validating shape and
/// finiteness.
Matrix matrix_from_entries(std::int64_t rows, std::int64_t cols, const std::vector<double>& entries);

namespace linalg {

/// σ₁(M).
double operator_norm(const Matrix& m);

/// sqrt(Σ M_ij²); always ≥ operator_norm.
double frobenius_norm(const Matrix& m);

}  // namespace linalg
}  // namespace lrd

#endif  // LRD_MATRIX_HPP
