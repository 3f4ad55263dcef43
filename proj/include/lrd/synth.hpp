#ifndef LRD_SYNTH_HPP
#define LRD_SYNTH_HPP

#include <cstdint>
#include <json.hpp>

#include "lrd/matrix.hpp"
#include "lrd/tensor3.hpp"

namespace lrd::synth {

/// m×n signal U·diag(σ)·Vᵀ with σ_i = beta^i (i starting at 1), globally
/// rescaled so ‖X‖_F = lambda·sqrt(m·n).
struct MatrixSignalSpec {
  std::int64_t m;
  std::int64_t n;
  double beta = 0.8;
  double lambda;
  std::uint64_t seed;
};

/// p×p×p signal G ×₁U1 ×₂U2 ×₃U3 with a superdiagonal s×s×s core,
/// γ_i = beta^i, rescaled so ‖X‖_F = lambda·sqrt(p³).
struct TensorSignalSpec {
  std::int64_t p;
  std::int64_t s;
  double beta = 0.8;
  double lambda;
  std::uint64_t seed;
};

/// I.i.d. noise with standard deviation kappa.
struct NoiseSpec {
  double kappa = 1.0;
  std::uint64_t seed;
};

enum class NoiseKind { kGaussian, kRademacher };

/// Generation-time switches. `antithetic` negates every draw of the same
/// stream (seed-paired -Z); `kind` selects the sub-Gaussian family.
struct NoiseOptions {
  NoiseKind kind = NoiseKind::kGaussian;
  bool antithetic = false;
};

Matrix gen_matrix_signal(const MatrixSignalSpec& spec);
tensor::Tensor3 gen_tensor_signal(const TensorSignalSpec& spec);

tensor::Tensor3 gen_noise_tensor(tensor::Dims3 dims, const NoiseSpec& spec,
                                 NoiseOptions options = {});
Matrix gen_noise_matrix(std::int64_t rows, std::int64_t cols, const NoiseSpec& spec,
                        NoiseOptions options = {});

/// The exact singular values every unfolding of the generated signal carries
/// (the rescaled beta^i sequence), nonincreasing. Shared by the matrix and
/// tensor generators.
Vector matrix_signal_spectrum(const MatrixSignalSpec& spec);
Vector tensor_signal_spectrum(const TensorSignalSpec& spec);

void to_json(nlohmann::json& j, const MatrixSignalSpec& spec);
void from_json(const nlohmann::json& j, MatrixSignalSpec& spec);
void to_json(nlohmann::json& j, const TensorSignalSpec& spec);
void from_json(const nlohmann::json& j, TensorSignalSpec& spec);
void to_json(nlohmann::json& j, const NoiseSpec& spec);
void from_json(const nlohmann::json& j, NoiseSpec& spec);

}  // namespace lrd::synth

#endif  // LRD_SYNTH_HPP
