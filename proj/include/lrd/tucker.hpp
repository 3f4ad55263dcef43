#ifndef LRD_TUCKER_HPP
#define LRD_TUCKER_HPP

#include <array>

#include "lrd/subspace.hpp"
#include "lrd/tensor3.hpp"

namespace lrd::tensor {

/// Core tensor plus three orthonormal factors; reconstructs to
/// core ×₁ U1 ×₂ U2 ×₃ U3.
struct TuckerDecomposition {
  Tensor3 core;
  std::array<linalg::Subspace, 3> factors;

  TuckerDecomposition(Tensor3 core, std::array<linalg::Subspace, 3> factors);

  Dims3 ambient_dims() const;
  Dims3 ranks() const { return core.dims(); }
};

Tensor3 tucker_reconstruct(const TuckerDecomposition& t);

/// Factored contraction of Remark-2 shape: t_k = U_kᵀ v_k, then the core is
/// contracted mode by mode. Flops = 2·Σ p_k r_k + 2·r1r2r3 + 2·r2r3 + r3.
ContractionResult contract_vectors_tucker(const TuckerDecomposition& t, const Vector& v1,
                                          const Vector& v2, const Vector& v3);

}  // namespace lrd::tensor

#endif  // LRD_TUCKER_HPP
