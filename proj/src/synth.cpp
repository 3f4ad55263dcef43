#include "lrd/synth.hpp"

#include <cmath>

#include "lrd/errors.hpp"
#include "lrd/rng.hpp"
#include "lrd/subspace.hpp"
#include "lrd/tucker.hpp"

namespace lrd::synth {

namespace {

void check(const MatrixSignalSpec& s) {
  if (!(s.beta > 0.0 && s.beta < 1.0)) throw ParameterError("MatrixSignalSpec: beta in (0,1)");
  if (!(s.lambda > 0.0)) throw ParameterError("MatrixSignalSpec: lambda > 0");
  if (s.n <= 0 || s.m < s.n) throw ParameterError("MatrixSignalSpec: need 0 < n <= m");
}

void check(const TensorSignalSpec& s) {
  if (!(s.beta > 0.0 && s.beta < 1.0)) throw ParameterError("TensorSignalSpec: beta in (0,1)");
  if (!(s.lambda > 0.0)) throw ParameterError("TensorSignalSpec: lambda > 0");
  if (s.s <= 0 || s.p < s.s) throw ParameterError("TensorSignalSpec: need 0 < s <= p");
}

void check(const NoiseSpec& s) {
  if (!(s.kappa > 0.0)) throw ParameterError("NoiseSpec: kappa > 0");
}

// beta^1, ..., beta^len rescaled so the l2 norm equals target.
Vector scaled_decay(double beta, std::int64_t len, double target) {
  Vector sigma(len);
  double pow = 1.0;
  for (std::int64_t i = 0; i < len; ++i) {
    pow *= beta;
    sigma(i) = pow;
  }
  double sumsq = 0.0;
  for (std::int64_t i = len - 1; i >= 0; --i) sumsq += sigma(i) * sigma(i);
  sigma *= target / std::sqrt(sumsq);
  return sigma;
}

template <typename Fill>
void fill_noise(Fill&& put, std::int64_t count, const NoiseSpec& spec, NoiseOptions options) {
  rng::CounterRng gen(rng::stream_key(spec.seed, "noise"));
  const double flip = options.antithetic ? -1.0 : 1.0;
  for (std::int64_t i = 0; i < count; ++i) {
    const double draw = (options.kind == NoiseKind::kGaussian) ? gen.next_gaussian()
                                                               : gen.next_sign();
    put(i, flip * spec.kappa * draw);
  }
}

}  // namespace

Vector matrix_signal_spectrum(const MatrixSignalSpec& spec) {
  check(spec);
  return scaled_decay(spec.beta, spec.n,
                      spec.lambda * std::sqrt(static_cast<double>(spec.m * spec.n)));
}

Vector tensor_signal_spectrum(const TensorSignalSpec& spec) {
  check(spec);
  const double p = static_cast<double>(spec.p);
  return scaled_decay(spec.beta, spec.s, spec.lambda * std::sqrt(p * p * p));
}

Matrix gen_matrix_signal(const MatrixSignalSpec& spec) {
  const Vector sigma = matrix_signal_spectrum(spec);
  const Matrix u = linalg::random_orthonormal(spec.m, spec.n, rng::derive(spec.seed, "U")).basis;
  const Matrix v = linalg::random_orthonormal(spec.n, spec.n, rng::derive(spec.seed, "V")).basis;
  return u * sigma.asDiagonal() * v.transpose();
}

tensor::Tensor3 gen_tensor_signal(const TensorSignalSpec& spec) {
  const Vector gamma = tensor_signal_spectrum(spec);
  tensor::Tensor3 core = tensor::Tensor3::zeros({spec.s, spec.s, spec.s});
  for (std::int64_t i = 0; i < spec.s; ++i) core(i, i, i) = gamma(i);
  std::array<linalg::Subspace, 3> factors = {
      linalg::random_orthonormal(spec.p, spec.s, rng::derive(spec.seed, "U1")),
      linalg::random_orthonormal(spec.p, spec.s, rng::derive(spec.seed, "U2")),
      linalg::random_orthonormal(spec.p, spec.s, rng::derive(spec.seed, "U3"))};
  return tensor::tucker_reconstruct(tensor::TuckerDecomposition(std::move(core), factors));
}

tensor::Tensor3 gen_noise_tensor(tensor::Dims3 dims, const NoiseSpec& spec,
                                 NoiseOptions options) {
  check(spec);
  tensor::Tensor3 z = tensor::Tensor3::zeros(dims);
  fill_noise([&z](std::int64_t i, double v) { z.data()[i] = v; }, z.size(), spec, options);
  return z;
}

Matrix gen_noise_matrix(std::int64_t rows, std::int64_t cols, const NoiseSpec& spec,
                        NoiseOptions options) {
  check(spec);
  if (rows <= 0 || cols <= 0) throw ParameterError("gen_noise_matrix: dims must be positive");
  Matrix z(rows, cols);
  fill_noise([&z](std::int64_t i, double v) { z.data()[i] = v; }, rows * cols, spec, options);
  return z;
}

void to_json(nlohmann::json& j, const MatrixSignalSpec& spec) {
  j = {{"m", spec.m}, {"n", spec.n}, {"beta", spec.beta}, {"lambda", spec.lambda},
       {"seed", spec.seed}};
}

void from_json(const nlohmann::json& j, MatrixSignalSpec& spec) {
  spec.m = j.at("m").get<std::int64_t>();
  spec.n = j.at("n").get<std::int64_t>();
  spec.beta = j.value("beta", 0.8);
  spec.lambda = j.at("lambda").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(nlohmann::json& j, const TensorSignalSpec& spec) {
  j = {{"p", spec.p}, {"s", spec.s}, {"beta", spec.beta}, {"lambda", spec.lambda},
       {"seed", spec.seed}};
}

void from_json(const nlohmann::json& j, TensorSignalSpec& spec) {
  spec.p = j.at("p").get<std::int64_t>();
  spec.s = j.at("s").get<std::int64_t>();
  spec.beta = j.value("beta", 0.8);
  spec.lambda = j.at("lambda").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
}

void to_json(nlohmann::json& j, const NoiseSpec& spec) {
  j = {{"kappa", spec.kappa}, {"seed", spec.seed}};
}

void from_json(const nlohmann::json& j, NoiseSpec& spec) {
  spec.kappa = j.value("kappa", 1.0);
  spec.seed = j.at("seed").get<std::uint64_t>();
}

}  // namespace lrd::synth
