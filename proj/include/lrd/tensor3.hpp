#ifndef LRD_TENSOR3_HPP
#define LRD_TENSOR3_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "lrd/matrix.hpp"

namespace lrd::tensor {

using Dims3 = std::array<std::int64_t, 3>;

/// Dense third-order tensor. Layout: i3 fastest, then i2, then i1, so entry
/// (i1,i2,i3) lives at offset (i1·p2 + i2)·p3 + i3. Guarded at 2^31 entries.
class Tensor3 {
 public:
  Tensor3(Dims3 dims, std::vector<double> entries);

  static Tensor3 zeros(Dims3 dims);

  const Dims3& dims() const { return dims_; }
  std::int64_t dim(int k) const { return dims_[static_cast<std::size_t>(k)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }

  double operator()(std::int64_t i1, std::int64_t i2, std::int64_t i3) const {
    return entries_[static_cast<std::size_t>((i1 * dims_[1] + i2) * dims_[2] + i3)];
  }
  double& operator()(std::int64_t i1, std::int64_t i2, std::int64_t i3) {
    return entries_[static_cast<std::size_t>((i1 * dims_[1] + i2) * dims_[2] + i3)];
  }

  const double* data() const { return entries_.data(); }
  double* data() { return entries_.data(); }
  const std::vector<double>& entries() const { return entries_; }

  double frobenius_norm() const;

  Tensor3& operator+=(const Tensor3& other);
  Tensor3& operator-=(const Tensor3& other);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

 private:
  Dims3 dims_;
  std::vector<double> entries_;
};

/// Flop bookkeeping under the convention that a multiply-add pair costs 2.
struct FlopCount {
  std::uint64_t flops = 0;
  FlopCount& operator+=(FlopCount other) {
    flops += other.flops;
    return *this;
  }
  friend FlopCount operator+(FlopCount a, FlopCount b) { return a += b; }
};

/// Mode-k unfolding (k in {1,2,3}). Mode-1 is p1 × p2p3 with column
/// j = (i2-1)·p3 + i3 (mode-3 index fastest); modes 2 and 3 follow the cyclic
/// convention: mode-2 is p2 × p1p3 (i3 fastest, then i1), mode-3 is
/// p3 × p1p2 (i2 fastest, then i1). This is the column order that makes
/// matricize(X ×₂ Aᵀ ×₃ Bᵀ, 1) = matricize(X,1)·(A ⊗ B) hold verbatim.
Matrix matricize(const Tensor3& x, int mode);

/// Inverse of matricize: tensorize(matricize(X,k), k, dims) == X exactly.
Tensor3 tensorize(const Matrix& m, int mode, Dims3 dims);

/// Mode-k product: matricize(result, k) = M · matricize(X, k). Requires
/// M.cols() == dims[k]; the result's mode-k dimension is M.rows().
Tensor3 mode_product(const Tensor3& x, int mode, const Matrix& m);

struct ContractionResult {
  double value;
  FlopCount flops;
};

/// Σ X(i,j,k)·v1(i)·v2(j)·v3(k) by dense enumeration; flops = 2·p1p2p3.
ContractionResult contract_vectors_dense(const Tensor3& x, const Vector& v1, const Vector& v2,
                                         const Vector& v3);

/// Tucker rank at relative threshold tol: r_k = #{σ_i(matricize(X,k)) > tol·σ1}.
Dims3 tucker_rank(const Tensor3& x, double tol);

}  // namespace lrd::tensor

#endif  // LRD_TENSOR3_HPP
