// lrd-bench: synthetic low-rank denoising experiments, bound evaluation and
// DT3 tensor denoising from the command line.
//
// Exit codes: 0 ok, 1 tolerance failure, 2 usage error, 3 resource guard.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "lrd/bench.hpp"
#include "lrd/bounds.hpp"
#include "lrd/errors.hpp"
#include "lrd/synth.hpp"
#include "lrd/tensor_io.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 42;
constexpr const char* kSeedEnvVar = "LRD_SEED";

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedEnvVar)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw lrd::ParameterError(std::string(kSeedEnvVar) + " is not an unsigned integer");
    }
  }
  return kDefaultSeed;
}

bool wants_json(const std::string& path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json";
}

// Writes rows to --out (JSON by extension, CSV otherwise) or CSV to stdout.
void emit_rows(const std::vector<lrd::bench::SummaryRow>& rows, const std::string& out_path,
               bool with_bounds) {
  if (out_path.empty()) {
    lrd::bench::write_csv(std::cout, rows, with_bounds);
    return;
  }
  std::ofstream f(out_path, std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + out_path);
  if (wants_json(out_path)) {
    lrd::bench::write_json(f, rows);
  } else {
    lrd::bench::write_csv(f, rows, with_bounds);
  }
}

struct GlobalOptions {
  std::uint64_t seed = kDefaultSeed;
  int replicates = 50;
  std::string out_path;
  int parallelism = static_cast<int>(std::thread::hardware_concurrency());
  bool with_bounds = false;
  std::int64_t entry_budget = 16'000'000;

  lrd::bench::RunOptions run_options() const {
    return {std::max(1, parallelism), with_bounds, entry_budget};
  }
};

int run_simulate(const GlobalOptions& global, lrd::bench::ExperimentSpec spec) {
  spec.seed = global.seed;
  spec.replicates = global.replicates;
  const auto rows = lrd::bench::run_grid({spec}, global.run_options());
  emit_rows(rows, global.out_path, global.with_bounds);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-adaptive low-rank denoising benchmarks (truncated SVD and one-step HOSVD)"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  try {
    global.seed = default_seed();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  app.add_option("--seed", global.seed,
                 "Base seed (default: $" + std::string(kSeedEnvVar) + " or 42)");
  app.add_option("--replicates", global.replicates, "Replicates per cell (default 50)");
  app.add_option("--out", global.out_path, "Output path (.json for JSON, CSV otherwise)");
  app.add_option("--parallel", global.parallelism, "Worker threads for replicates");
  app.add_flag("--bounds", global.with_bounds, "Attach per-row bound reports");
  app.add_option("--entry-budget", global.entry_budget,
                 "Largest dense object allowed, in entries (default 16e6)");

  // simulate-matrix
  auto* sim_matrix = app.add_subcommand("simulate-matrix", "Truncated-SVD denoising grid row");
  std::int64_t m = 100, n = 15;
  double lambda = 10.0, beta = 0.8, kappa = 1.0;
  std::vector<std::int64_t> ranks_list{10};
  sim_matrix->add_option("--m", m, "Rows");
  sim_matrix->add_option("--n", n, "Cols");
  sim_matrix->add_option("--lambda", lambda, "SNR parameter");
  sim_matrix->add_option("--beta", beta, "Spectral decay base");
  sim_matrix->add_option("--kappa", kappa, "Noise stddev (0 = noiseless)");
  sim_matrix->add_option("--ranks", ranks_list, "Ranks to evaluate")->delimiter(',');

  // simulate-tensor
  auto* sim_tensor = app.add_subcommand("simulate-tensor", "One-step HOSVD denoising grid row");
  std::int64_t p = 20, s = 15;
  double t_lambda = 10.0, t_beta = 0.8, t_kappa = 1.0;
  std::vector<std::int64_t> t_ranks_list{10};
  sim_tensor->add_option("--p", p, "Ambient dim (tensor is p x p x p)");
  sim_tensor->add_option("--s", s, "Latent dim of the superdiagonal core");
  sim_tensor->add_option("--lambda", t_lambda, "SNR parameter");
  sim_tensor->add_option("--beta", t_beta, "Spectral decay base");
  sim_tensor->add_option("--kappa", t_kappa, "Noise stddev (0 = noiseless)");
  sim_tensor->add_option("--ranks", t_ranks_list, "Tucker ranks to evaluate ((r,r,r) each)")->delimiter(',');

  // simulate-cov
  auto* sim_cov = app.add_subcommand("simulate-cov", "Sample-covariance truncation grid row");
  std::int64_t cov_n = 50, cov_samples = 500;
  double cov_lambda = 10.0, cov_beta = 0.8;
  std::vector<std::int64_t> cov_ranks_list{5};
  sim_cov->add_option("--n", cov_n, "Dimension");
  sim_cov->add_option("--samples", cov_samples, "Sample count N");
  sim_cov->add_option("--lambda", cov_lambda, "Population scale");
  sim_cov->add_option("--beta", cov_beta, "Eigenvalue decay base");
  sim_cov->add_option("--ranks", cov_ranks_list, "Ranks to evaluate")->delimiter(',');

  // run-grid
  auto* run_grid_cmd = app.add_subcommand("run-grid", "Run ExperimentSpec records from JSON");
  std::string grid_path;
  run_grid_cmd->add_option("grid", grid_path, "JSON file with a list of ExperimentSpec records")
      ->required();

  // reproduce-table2
  auto* table2 = app.add_subcommand("reproduce-table2", "Compare against the published grid");
  std::string panel = "both";
  std::string policy_path;
  table2->add_option("--panel", panel, "matrix|tensor|both (default both)");
  table2->add_option("--tolerance-policy", policy_path, "JSON tolerance policy override");

  // bias-variance-sweep
  auto* sweep = app.add_subcommand("bias-variance-sweep", "Rank sweep with bound components");
  std::string sweep_kind = "tensor";
  std::int64_t sw_d1 = 50, sw_d2 = 25;
  double sw_lambda = 10.0, sw_beta = 0.8, sw_kappa = 1.0;
  std::vector<std::int64_t> sw_ranks_list;
  sweep->add_option("--kind", sweep_kind, "matrix|tensor|covariance");
  sweep->add_option("--dim1", sw_d1, "m (matrix), p (tensor) or n (covariance)");
  sweep->add_option("--dim2", sw_d2, "n (matrix), s (tensor) or N (covariance)");
  sweep->add_option("--lambda", sw_lambda, "SNR parameter");
  sweep->add_option("--beta", sw_beta, "Spectral decay base");
  sweep->add_option("--kappa", sw_kappa, "Noise stddev (0 = noiseless)");
  sweep->add_option("--ranks", sw_ranks_list, "Ranks to visit (default: 1..max)")->delimiter(',');

  // denoise
  auto* denoise = app.add_subcommand("denoise", "Denoise a DT3 v1 tensor file");
  std::string in_path, out_path_pos;
  std::vector<std::int64_t> denoise_ranks;
  denoise->add_option("input", in_path, "Input DT3 file")->required();
  denoise->add_option("output", out_path_pos, "Output DT3 file")->required();
  denoise->add_option("--ranks", denoise_ranks, "r1,r2,r3")->delimiter(',')->expected(3)->required();

  // check-bounds
  auto* check = app.add_subcommand("check-bounds", "Monte Carlo opnorm concentration summary");
  std::int64_t cb_m = 200, cb_n = 200;
  double cb_kappa = 1.0;
  int cb_trials = 100;
  check->add_option("--m", cb_m, "Rows");
  check->add_option("--n", cb_n, "Cols");
  check->add_option("--kappa", cb_kappa, "Noise stddev");
  check->add_option("--trials", cb_trials, "Trial count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (sim_matrix->parsed()) {
      lrd::bench::ExperimentSpec spec;
      spec.kind = lrd::bench::ExperimentKind::kMatrix;
      spec.dim1 = m;
      spec.dim2 = n;
      spec.lambda = lambda;
      spec.beta = beta;
      spec.kappa = kappa;
      spec.ranks = ranks_list;
      return run_simulate(global, spec);
    }
    if (sim_tensor->parsed()) {
      lrd::bench::ExperimentSpec spec;
      spec.kind = lrd::bench::ExperimentKind::kTensor;
      spec.dim1 = p;
      spec.dim2 = s;
      spec.lambda = t_lambda;
      spec.beta = t_beta;
      spec.kappa = t_kappa;
      spec.ranks = t_ranks_list;
      return run_simulate(global, spec);
    }
    if (sim_cov->parsed()) {
      lrd::bench::ExperimentSpec spec;
      spec.kind = lrd::bench::ExperimentKind::kCovariance;
      spec.dim1 = cov_n;
      spec.dim2 = cov_samples;
      spec.lambda = cov_lambda;
      spec.beta = cov_beta;
      spec.ranks = cov_ranks_list;
      return run_simulate(global, spec);
    }
    if (run_grid_cmd->parsed()) {
      std::ifstream f(grid_path);
      if (!f) throw lrd::ParameterError("cannot open grid file " + grid_path);
      const nlohmann::json j = nlohmann::json::parse(f);
      std::vector<lrd::bench::ExperimentSpec> specs;
      for (const auto& item : j) {
        auto spec = item.get<lrd::bench::ExperimentSpec>();
        if (spec.seed == 0) spec.seed = global.seed;
        specs.push_back(std::move(spec));
      }
      const auto rows = lrd::bench::run_grid(specs, global.run_options());
      emit_rows(rows, global.out_path, global.with_bounds);
      return 0;
    }
    if (table2->parsed()) {
      lrd::bench::Table2Panel which;
      if (panel == "matrix") {
        which = lrd::bench::Table2Panel::kMatrix;
      } else if (panel == "tensor") {
        which = lrd::bench::Table2Panel::kTensor;
      } else if (panel == "both") {
        which = lrd::bench::Table2Panel::kBoth;
      } else {
        throw lrd::ParameterError("--panel must be matrix, tensor or both");
      }
      lrd::bench::TolerancePolicy policy;
      if (!policy_path.empty()) {
        std::ifstream f(policy_path);
        if (!f) throw lrd::ParameterError("cannot open tolerance policy " + policy_path);
        policy = nlohmann::json::parse(f).get<lrd::bench::TolerancePolicy>();
      }
      const auto result =
          lrd::bench::reproduce_table2(which, policy, global.run_options(), global.seed);
      if (global.out_path.empty()) {
        lrd::bench::write_comparison_csv(std::cout, result.rows);
      } else {
        std::ofstream f(global.out_path, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + global.out_path);
        if (wants_json(global.out_path)) {
          lrd::bench::write_comparison_json(f, result);
        } else {
          lrd::bench::write_comparison_csv(f, result.rows);
        }
      }
      std::cerr << result.n_pass << "/" << result.rows.size() << " cells within tolerance";
      if (result.systematic_deviation) std::cerr << " (systematic one-sided deviation)";
      std::cerr << "\n";
      return result.all_pass ? 0 : 1;
    }
    if (sweep->parsed()) {
      lrd::bench::ExperimentSpec spec;
      spec.kind = lrd::bench::experiment_kind_from_string(sweep_kind);
      spec.dim1 = sw_d1;
      spec.dim2 = sw_d2;
      spec.lambda = sw_lambda;
      spec.beta = sw_beta;
      spec.kappa = sw_kappa;
      spec.seed = global.seed;
      spec.replicates = global.replicates;
      if (sw_ranks_list.empty()) {
        const std::int64_t cap = (spec.kind == lrd::bench::ExperimentKind::kMatrix)
                                     ? std::min(sw_d1, sw_d2)
                                     : (spec.kind == lrd::bench::ExperimentKind::kTensor
                                            ? sw_d2
                                            : sw_d1);
        for (std::int64_t r = 1; r <= cap; ++r) spec.ranks.push_back(r);
      } else {
        spec.ranks = sw_ranks_list;
      }
      const auto rows = lrd::bench::bias_variance_sweep(spec, global.run_options());
      if (global.out_path.empty()) {
        lrd::bench::write_sweep_csv(std::cout, rows);
      } else {
        std::ofstream f(global.out_path, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + global.out_path);
        lrd::bench::write_sweep_csv(f, rows);
      }
      return 0;
    }
    if (denoise->parsed()) {
      if (denoise_ranks.size() != 3) {
        throw lrd::ParameterError("--ranks needs exactly r1,r2,r3");
      }
      const auto report = lrd::bench::denoise_file(
          in_path, {denoise_ranks[0], denoise_ranks[1], denoise_ranks[2]}, out_path_pos);
      nlohmann::json j = report;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (check->parsed()) {
      const auto summary = lrd::bounds::monte_carlo_opnorm(cb_m, cb_n, cb_kappa, cb_trials,
                                                           global.seed,
                                                           std::max(1, global.parallelism));
      nlohmann::json j = {{"m", cb_m},
                          {"n", cb_n},
                          {"kappa", cb_kappa},
                          {"trials", summary.trials},
                          {"min", summary.min},
                          {"median", summary.median},
                          {"max", summary.max},
                          {"p99", summary.p99}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const lrd::ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const lrd::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
