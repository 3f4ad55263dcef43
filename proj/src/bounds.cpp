#include "lrd/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "lrd/errors.hpp"
#include "lrd/rng.hpp"
#include "lrd/svd.hpp"
#include "lrd/synth.hpp"

namespace lrd::bounds {

double thm1_variance_term(double kappa, tensor::Dims3 p, tensor::Dims3 r) {
  for (int k = 0; k < 3; ++k) {
    if (p[static_cast<std::size_t>(k)] <= 0 || r[static_cast<std::size_t>(k)] <= 0) {
      throw ParameterError("thm1_variance_term: dims and ranks must be positive");
    }
  }
  const double dof = static_cast<double>(p[0] * r[0] + p[1] * r[1] + p[2] * r[2]) +
                     static_cast<double>(r[0] * r[1] * r[2]);
  return kappa * std::sqrt(dof);
}

double SnrMargins::min_margin() const { return std::min({margin[0], margin[1], margin[2]}); }

SnrMargins snr_condition(const std::array<Vector, 3>& sigma_per_mode,
                         estimators::TargetRanks ranks, tensor::Dims3 dims, double kappa,
                         double c_gap) {
  const std::int64_t r[] = {ranks.r1, ranks.r2, ranks.r3};
  const std::int64_t r_max = std::max({ranks.r1, ranks.r2, ranks.r3});
  const double p123 = static_cast<double>(dims[0]) * static_cast<double>(dims[1]) *
                      static_cast<double>(dims[2]);
  const double threshold =
      c_gap * kappa * kappa *
      (std::sqrt(p123 * static_cast<double>(r_max)) +
       static_cast<double>((dims[0] + dims[1] + dims[2]) * r_max));
  SnrMargins out{{}, threshold};
  for (int k = 0; k < 3; ++k) {
    const Vector& sigma = sigma_per_mode[static_cast<std::size_t>(k)];
    if (sigma.size() < r[k]) {
      throw ParameterError("snr_condition: sigma list too short to read sigma_{r_k}");
    }
    const double top = sigma(r[k] - 1);
    const double next = (sigma.size() > r[k]) ? sigma(r[k]) : 0.0;
    const double gap = top - next;
    out.margin[static_cast<std::size_t>(k)] = gap * gap - threshold;
  }
  return out;
}

double thm2_bound(std::int64_t r, double z_opnorm, double xi) {
  if (r < 0 || z_opnorm < 0 || xi < 0) throw ParameterError("thm2_bound: negative input");
  return (2.0 + std::sqrt(2.0)) * (std::sqrt(static_cast<double>(r)) * z_opnorm + xi);
}

double corollary_rate(RateKind kind, const RateParams& params) {
  switch (kind) {
    case RateKind::kIidSubgaussian:
    case RateKind::kSubgaussianMatrix: {
      if (params.m <= 0 || params.n <= 0 || params.r <= 0) {
        throw ParameterError("corollary_rate: positive r, m, n required");
      }
      return params.kappa * std::sqrt(static_cast<double>(params.r * (params.m + params.n)));
    }
    case RateKind::kCovariance: {
      if (params.n <= 0 || params.N <= 0 || params.r <= 0) {
        throw ParameterError("corollary_rate: positive r, n, N required");
      }
      const double ratio = static_cast<double>(params.n) / static_cast<double>(params.N);
      return params.kappa * params.kappa * std::sqrt(static_cast<double>(params.r)) *
             (std::sqrt(ratio) + ratio);
    }
  }
  throw ParameterError("corollary_rate: unknown kind");
}

double sin_theta_bound_unbalanced(const Vector& sigma, std::int64_t r, double kappa,
                                  std::int64_t n, std::int64_t m) {
  if (r < 1 || r > sigma.size()) throw ParameterError("sin_theta_bound_unbalanced: bad rank");
  const double top = sigma(r - 1);
  const double next = (sigma.size() > r) ? sigma(r) : 0.0;
  const double gap = top - next;
  if (!(gap > 0.0)) {
    throw ParameterError("sin_theta_bound_unbalanced: zero singular gap");
  }
  const double k2 = kappa * kappa;
  const double g2 = gap * gap;
  return static_cast<double>(m) * k2 / g2 +
         k2 * k2 * static_cast<double>(n) * static_cast<double>(m) / (g2 * g2);
}

OpnormSummary monte_carlo_opnorm(std::int64_t m, std::int64_t n, double kappa, int trials,
                                 std::uint64_t seed, int parallelism) {
  if (trials < 1) throw ParameterError("monte_carlo_opnorm: trials must be >= 1");
  if (m <= 0 || n <= 0 || !(kappa > 0)) {
    throw ParameterError("monte_carlo_opnorm: bad dimensions or kappa");
  }
  std::vector<double> stats(static_cast<std::size_t>(trials));
  const double denom = kappa * (std::sqrt(static_cast<double>(m)) +
                                std::sqrt(static_cast<double>(n)));
  auto run_range = [&](int begin, int end) {
    for (int t = begin; t < end; ++t) {
      const synth::NoiseSpec noise{kappa, rng::stream_key(seed, "opnorm-trial", t)};
      const Matrix z = synth::gen_noise_matrix(m, n, noise);
      stats[static_cast<std::size_t>(t)] =
          ((m == 1 && n == 1) ? std::abs(z(0, 0)) : linalg::operator_norm(z)) / denom;
    }
  };
  const int workers = std::max(1, std::min(parallelism, trials));
  if (workers == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(trials, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  std::sort(stats.begin(), stats.end());
  OpnormSummary out{};
  out.trials = trials;
  out.min = stats.front();
  out.max = stats.back();
  out.median = (trials % 2 == 1) ? stats[static_cast<std::size_t>(trials / 2)]
                                 : 0.5 * (stats[static_cast<std::size_t>(trials / 2 - 1)] +
                                          stats[static_cast<std::size_t>(trials / 2)]);
  const int rank99 = std::max(1, static_cast<int>(std::ceil(0.99 * trials)));
  out.p99 = stats[static_cast<std::size_t>(rank99 - 1)];
  return out;
}

void to_json(nlohmann::json& j, const BoundReport& report) {
  j = {{"variance_term", report.variance_term},
       {"bias_lower", report.bias.lower},
       {"bias_upper", report.bias.upper},
       {"kappa", report.kappa},
       {"dims", {report.dims[0], report.dims[1], report.dims[2]}},
       {"ranks", {report.ranks[0], report.ranks[1], report.ranks[2]}},
       {"total_upper_c1", report.total_upper(1.0)}};
  if (std::isnan(report.snr_margin)) {
    j["snr_margin"] = nullptr;
  } else {
    j["snr_margin"] = report.snr_margin;
  }
}

}  // namespace lrd::bounds
