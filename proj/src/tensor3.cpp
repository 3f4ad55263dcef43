#include "lrd/tensor3.hpp"

#include <cmath>
#include <string>

#include "lrd/errors.hpp"
#include "lrd/svd.hpp"

namespace lrd::tensor {

namespace {

constexpr std::int64_t kMaxEntries = std::int64_t(1) << 31;

std::int64_t checked_size(Dims3 dims) {
  for (std::int64_t d : dims) {
    if (d <= 0) throw ParameterError("Tensor3: dims must be positive");
  }
  if (dims[0] > kMaxEntries / dims[1] || dims[0] * dims[1] > kMaxEntries / dims[2]) {
    throw ParameterError("Tensor3: more than 2^31 entries");
  }
  return dims[0] * dims[1] * dims[2];
}

void check_mode(int mode) {
  if (mode < 1 || mode > 3) {
    throw ParameterError("mode must be 1, 2 or 3, got " + std::to_string(mode));
  }
}

}  // namespace

Tensor3::Tensor3(Dims3 dims, std::vector<double> entries)
    : dims_(dims), entries_(std::move(entries)) {
  const std::int64_t n = checked_size(dims_);
  if (static_cast<std::int64_t>(entries_.size()) != n) {
    throw ParameterError("Tensor3: entries length does not equal p1*p2*p3");
  }
  for (double e : entries_) {
    if (!std::isfinite(e)) throw ParameterError("Tensor3: non-finite entry");
  }
}

Tensor3 Tensor3::zeros(Dims3 dims) {
  const std::int64_t n = checked_size(dims);
  return Tensor3(dims, std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

double Tensor3::frobenius_norm() const {
  return Eigen::Map<const Eigen::VectorXd>(entries_.data(), size()).norm();
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
  if (dims_ != other.dims_) throw ParameterError("Tensor3 +=: dims mismatch");
  Eigen::Map<Eigen::VectorXd>(entries_.data(), size()) +=
      Eigen::Map<const Eigen::VectorXd>(other.entries_.data(), other.size());
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
  if (dims_ != other.dims_) throw ParameterError("Tensor3 -=: dims mismatch");
  Eigen::Map<Eigen::VectorXd>(entries_.data(), size()) -=
      Eigen::Map<const Eigen::VectorXd>(other.entries_.data(), other.size());
  return *this;
}

Matrix matricize(const Tensor3& x, int mode) {
  check_mode(mode);
  const auto [p1, p2, p3] = x.dims();
  if (mode == 1) {
    // The storage layout is already row-major p1 × (p2·p3).
    return Eigen::Map<const Matrix>(x.data(), p1, p2 * p3);
  }
  if (mode == 2) {
    Matrix out(p2, p1 * p3);
    for (std::int64_t i1 = 0; i1 < p1; ++i1)
      for (std::int64_t i2 = 0; i2 < p2; ++i2)
        for (std::int64_t i3 = 0; i3 < p3; ++i3) out(i2, i1 * p3 + i3) = x(i1, i2, i3);
    return out;
  }
  Matrix out(p3, p1 * p2);
  for (std::int64_t i1 = 0; i1 < p1; ++i1)
    for (std::int64_t i2 = 0; i2 < p2; ++i2)
      for (std::int64_t i3 = 0; i3 < p3; ++i3) out(i3, i1 * p2 + i2) = x(i1, i2, i3);
  return out;
}

Tensor3 tensorize(const Matrix& m, int mode, Dims3 dims) {
  check_mode(mode);
  const auto [p1, p2, p3] = dims;
  const std::int64_t rows[] = {p1, p2, p3};
  const std::int64_t cols[] = {p2 * p3, p1 * p3, p1 * p2};
  if (m.rows() != rows[mode - 1] || m.cols() != cols[mode - 1]) {
    throw ParameterError("tensorize: matrix shape inconsistent with dims and mode");
  }
  Tensor3 out = Tensor3::zeros(dims);
  if (mode == 1) {
    Eigen::Map<Matrix>(out.data(), p1, p2 * p3) = m;
    return out;
  }
  if (mode == 2) {
    for (std::int64_t i1 = 0; i1 < p1; ++i1)
      for (std::int64_t i2 = 0; i2 < p2; ++i2)
        for (std::int64_t i3 = 0; i3 < p3; ++i3) out(i1, i2, i3) = m(i2, i1 * p3 + i3);
    return out;
  }
  for (std::int64_t i1 = 0; i1 < p1; ++i1)
    for (std::int64_t i2 = 0; i2 < p2; ++i2)
      for (std::int64_t i3 = 0; i3 < p3; ++i3) out(i1, i2, i3) = m(i3, i1 * p2 + i2);
  return out;
}

Tensor3 mode_product(const Tensor3& x, int mode, const Matrix& m) {
  check_mode(mode);
  if (m.cols() != x.dim(mode - 1)) {
    throw ParameterError("mode_product: matrix cols must equal the mode-" + std::to_string(mode) +
                         " dimension");
  }
  Dims3 out_dims = x.dims();
  out_dims[static_cast<std::size_t>(mode - 1)] = m.rows();
  if (mode == 1) {
    // Zero-copy on both sides of the gemm.
    const auto [p1, p2, p3] = x.dims();
    Tensor3 out = Tensor3::zeros(out_dims);
    Eigen::Map<Matrix>(out.data(), m.rows(), p2 * p3).noalias() =
        m * Eigen::Map<const Matrix>(x.data(), p1, p2 * p3);
    return out;
  }
  return tensorize(Matrix(m * matricize(x, mode)), mode, out_dims);
}

ContractionResult contract_vectors_dense(const Tensor3& x, const Vector& v1, const Vector& v2,
                                         const Vector& v3) {
  const auto [p1, p2, p3] = x.dims();
  if (v1.size() != p1 || v2.size() != p2 || v3.size() != p3) {
    throw ParameterError("contract_vectors_dense: vector length mismatch");
  }
  double value = 0.0;
  for (std::int64_t i1 = 0; i1 < p1; ++i1) {
    Eigen::Map<const Matrix> slice(x.data() + i1 * p2 * p3, p2, p3);
    value += v1(i1) * (v2.transpose() * slice * v3).value();
  }
  return {value, FlopCount{2ull * static_cast<std::uint64_t>(p1 * p2 * p3)}};
}

Dims3 tucker_rank(const Tensor3& x, double tol) {
  if (tol < 0.0) throw ParameterError("tucker_rank: tol must be >= 0");
  Dims3 ranks{};
  for (int mode = 1; mode <= 3; ++mode) {
    const Vector sv = linalg::singular_values(matricize(x, mode));
    const double cutoff = tol * sv(0);
    std::int64_t r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    ranks[static_cast<std::size_t>(mode - 1)] = r;
  }
  return ranks;
}

}  // namespace lrd::tensor
