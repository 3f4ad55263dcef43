#include "lrd/tucker.hpp"

#include "lrd/errors.hpp"

namespace lrd::tensor {

TuckerDecomposition::TuckerDecomposition(Tensor3 core_in,
                                         std::array<linalg::Subspace, 3> factors_in)
    : core(std::move(core_in)), factors(std::move(factors_in)) {
  for (int k = 0; k < 3; ++k) {
    if (factors[static_cast<std::size_t>(k)].rank() != core.dim(k)) {
      throw ParameterError("TuckerDecomposition: factor rank does not match core dim");
    }
  }
}

Dims3 TuckerDecomposition::ambient_dims() const {
  return {factors[0].ambient_dim(), factors[1].ambient_dim(), factors[2].ambient_dim()};
}

Tensor3 tucker_reconstruct(const TuckerDecomposition& t) {
  Tensor3 out = mode_product(t.core, 1, t.factors[0].basis);
  out = mode_product(out, 2, t.factors[1].basis);
  return mode_product(out, 3, t.factors[2].basis);
}

ContractionResult contract_vectors_tucker(const TuckerDecomposition& t, const Vector& v1,
                                          const Vector& v2, const Vector& v3) {
  const Dims3 p = t.ambient_dims();
  const Dims3 r = t.ranks();
  if (v1.size() != p[0] || v2.size() != p[1] || v3.size() != p[2]) {
    throw ParameterError("contract_vectors_tucker: vector length mismatch");
  }
  const Vector t1 = t.factors[0].basis.transpose() * v1;
  const Vector t2 = t.factors[1].basis.transpose() * v2;
  const Vector t3 = t.factors[2].basis.transpose() * v3;
  // S' = S ×₁ t1 (an r2×r3 slice), then s = t2ᵀ S', then w = sᵀ t3.
  Matrix s_prime = Matrix::Zero(r[1], r[2]);
  for (std::int64_t i = 0; i < r[0]; ++i) {
    s_prime += t1(i) * Eigen::Map<const Matrix>(t.core.data() + i * r[1] * r[2], r[1], r[2]);
  }
  const Vector s = s_prime.transpose() * t2;
  const double value = s.dot(t3);
  const std::uint64_t flops = 2ull * static_cast<std::uint64_t>(p[0] * r[0] + p[1] * r[1] +
                                                                p[2] * r[2]) +
                              2ull * static_cast<std::uint64_t>(r[0] * r[1] * r[2]) +
                              2ull * static_cast<std::uint64_t>(r[1] * r[2]) +
                              static_cast<std::uint64_t>(r[2]);
  return {value, FlopCount{flops}};
}

}  // namespace lrd::tensor
