#ifndef LRD_BOUNDS_HPP
#define LRD_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <json.hpp>

#include "lrd/estimators.hpp"
#include "lrd/matrix.hpp"
#include "lrd/tensor3.hpp"

namespace lrd::bounds {

/// κ·sqrt(Σ p_k r_k + r1·r2·r3), the effective-degrees-of-freedom noise cost.
double thm1_variance_term(double kappa, tensor::Dims3 p, tensor::Dims3 r);

struct SnrMargins {
  std::array<double, 3> margin;  ///< gap_k² minus the common threshold
  double threshold;
  bool holds() const { return margin[0] >= 0 && margin[1] >= 0 && margin[2] >= 0; }
  double min_margin() const;
};

/// Gap condition margins: margin_k = (σ_{r_k} - σ_{r_k+1})² -
/// C_gap·κ²(sqrt(p1p2p3·r_max) + Σ p_k·r_max). A missing σ_{r_k+1} counts
/// as 0.
SnrMargins snr_condition(const std::array<Vector, 3>& sigma_per_mode,
                         estimators::TargetRanks ranks, tensor::Dims3 dims, double kappa,
                         double c_gap);

/// (2+√2)(√r·‖Z‖ + ξ_(r)); the matrix bound is deterministic per realization.
double thm2_bound(std::int64_t r, double z_opnorm, double xi);

enum class RateKind { kIidSubgaussian, kSubgaussianMatrix, kCovariance };

struct RateParams {
  double kappa = 1.0;
  std::int64_t r = 1;
  std::int64_t m = 0;  ///< rows (matrix kinds)
  std::int64_t n = 0;  ///< cols, or the dimension for covariance
  std::int64_t N = 0;  ///< sample count (covariance)
};

/// Constant-free rate expressions of the corollaries:
/// κ·sqrt(r(m+n)) for the sub-Gaussian kinds, κ²·√r·(sqrt(n/N) + n/N) for
/// covariance.
double corollary_rate(RateKind kind, const RateParams& params);

/// m·κ²/Δ² + κ⁴·n·m/Δ⁴ with Δ = σ_r - σ_{r+1} (constant omitted). Throws on
/// a zero gap.
double sin_theta_bound_unbalanced(const Vector& sigma, std::int64_t r, double kappa,
                                  std::int64_t n, std::int64_t m);

struct OpnormSummary {
  double min;
  double median;
  double max;
  double p99;  ///< nearest-rank upper percentile
  int trials;
};

/// Monte Carlo distribution of ‖Z‖/(κ(√m+√n)) over i.i.d. N(0,κ²) draws.
/// Trials use per-trial derived seeds, so the summary is deterministic and
/// independent of the parallelism degree.
OpnormSummary monte_carlo_opnorm(std::int64_t m, std::int64_t n, double kappa, int trials,
                                 std::uint64_t seed, int parallelism = 1);

/// Evaluated theoretical quantities for one instance.
struct BoundReport {
  double variance_term;
  estimators::BiasBracket bias;
  double snr_margin;  ///< min margin over modes; NaN when not applicable
  double kappa;
  tensor::Dims3 dims;
  tensor::Dims3 ranks;

  double total_upper(double c) const { return c * (variance_term + bias.upper); }
};

void to_json(nlohmann::json& j, const BoundReport& report);

}  // namespace lrd::bounds

#endif  // LRD_BOUNDS_HPP
