#ifndef LRD_TOLERANCES_HPP
#define LRD_TOLERANCES_HPP

namespace lrd {

/// Central numerical tolerances. Every invariant check in the library reads
/// from one of these fields instead of a scattered literal.
struct Tolerances {
  double orthonormality = 1e-10;        ///< |QᵀQ - I| entrywise
  double reconstruction_rel = 1e-8;     ///< SVD reconstruction, relative to ‖input‖_F
  double truncation_residual = 1e-9;    ///< Eckart-Young residual agreement
  double sin_theta_equivalence = 1e-9;  ///< alternative sin-Θ formulas
  double inequality_slack = -1e-9;      ///< slack below which an inequality counts as violated
  double norm_preservation = 1e-10;     ///< orthonormal maps preserving Frobenius norm
  double bias_bracket_slop = 1e-12;     ///< lower ≤ upper + slop
  double contraction_value_rel = 1e-10; ///< dense vs factored contraction values

  static const Tolerances& standard() {
    static const Tolerances t{};
    return t;
  }
};

}  // namespace lrd

#endif  // LRD_TOLERANCES_HPP
