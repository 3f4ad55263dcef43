#include "lrd/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include "lrd/errors.hpp"
#include "lrd/rng.hpp"
#include "lrd/subspace.hpp"
#include "lrd/svd.hpp"
#include "lrd/synth.hpp"
#include "lrd/tensor_io.hpp"
#include "lrd/tucker.hpp"

namespace lrd::bench {

namespace {

using estimators::TargetRanks;
using tensor::Dims3;
using tensor::Tensor3;

std::string fmt_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void parallel_for(int count, int parallelism, const std::function<void(int)>& body) {
  const int workers = std::max(1, std::min(parallelism, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

void guard_spec(const ExperimentSpec& spec, std::int64_t budget) {
  std::int64_t largest = 0;
  switch (spec.kind) {
    case ExperimentKind::kTensor:
      largest = spec.dim1 * spec.dim1 * spec.dim1;
      break;
    case ExperimentKind::kMatrix:
      largest = spec.dim1 * spec.dim2;
      break;
    case ExperimentKind::kCovariance:
      largest = std::max(spec.dim1 * spec.dim1, spec.dim1 * spec.dim2);
      break;
  }
  if (largest > budget) {
    throw ResourceGuardError("cell " + to_string(spec.kind) + " lambda=" + fmt_g6(spec.lambda) +
                             " dims=(" + std::to_string(spec.dim1) + "," +
                             std::to_string(spec.dim2) + ") needs " + std::to_string(largest) +
                             " entries, budget is " + std::to_string(budget));
  }
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.replicates < 1) throw ParameterError("ExperimentSpec: replicates >= 1");
  if (spec.dim1 <= 0 || spec.dim2 <= 0) throw ParameterError("ExperimentSpec: positive dims");
  if (spec.kappa < 0) throw ParameterError("ExperimentSpec: kappa >= 0");
  if (spec.ranks.empty()) throw ParameterError("ExperimentSpec: at least one rank");
  const std::int64_t max_rank =
      (spec.kind == ExperimentKind::kCovariance) ? spec.dim1 : spec.dim2;
  const std::int64_t cap = (spec.kind == ExperimentKind::kMatrix)
                               ? std::min(spec.dim1, spec.dim2)
                               : (spec.kind == ExperimentKind::kTensor ? spec.dim1 : max_rank);
  for (std::int64_t r : spec.ranks) {
    if (r < 1 || r > cap) {
      throw ParameterError("ExperimentSpec: rank " + std::to_string(r) + " outside [1, " +
                           std::to_string(cap) + "]");
    }
  }
}

// Population covariance shared by every replicate of a covariance row:
// eigenvalues beta^i rescaled so ‖X*‖_F = lambda·n, Haar eigenvectors.
struct CovariancePopulation {
  Matrix truth;
  Matrix rotation;     // n×n
  Vector eigenvalues;  // nonincreasing
};

CovariancePopulation covariance_population(const ExperimentSpec& spec, std::uint64_t signal_key) {
  const std::int64_t n = spec.dim1;
  const synth::MatrixSignalSpec as_matrix{n, n, spec.beta, spec.lambda, signal_key};
  Vector eig = synth::matrix_signal_spectrum(as_matrix);
  Matrix u = linalg::random_orthonormal(n, n, rng::derive(signal_key, "U")).basis;
  Matrix truth = u * eig.asDiagonal() * u.transpose();
  truth = ((truth + Matrix(truth.transpose())) * 0.5).eval();
  return {std::move(truth), std::move(u), std::move(eig)};
}

double run_replicate(const ExperimentSpec& spec, std::int64_t rank, std::uint64_t signal_key,
                     std::uint64_t noise_key) {
  switch (spec.kind) {
    case ExperimentKind::kMatrix: {
      const synth::MatrixSignalSpec sig{spec.dim1, spec.dim2, spec.beta, spec.lambda, signal_key};
      Matrix truth = synth::gen_matrix_signal(sig);
      Matrix observed = truth;
      if (spec.kappa > 0) {
        observed += synth::gen_noise_matrix(spec.dim1, spec.dim2, {spec.kappa, noise_key});
      }
      return rel_err(estimators::truncated_svd_estimate(observed, rank), truth);
    }
    case ExperimentKind::kTensor: {
      const synth::TensorSignalSpec sig{spec.dim1, spec.dim2, spec.beta, spec.lambda, signal_key};
      Tensor3 truth = synth::gen_tensor_signal(sig);
      Tensor3 observed = truth;
      if (spec.kappa > 0) {
        observed += synth::gen_noise_tensor(truth.dims(), {spec.kappa, noise_key});
      }
      const auto result = estimators::one_step_hosvd(observed, TargetRanks::cubic(rank));
      return rel_err(result.estimate, truth);
    }
    case ExperimentKind::kCovariance: {
      const std::int64_t n = spec.dim1;
      const std::int64_t n_samples = spec.dim2;
      const auto population = covariance_population(spec, signal_key);
      Matrix g = synth::gen_noise_matrix(n_samples, n, {1.0, noise_key});
      Matrix samples =
          g * population.eigenvalues.cwiseSqrt().asDiagonal() * population.rotation.transpose();
      return rel_err(estimators::sample_cov_truncated(samples, rank).estimate, population.truth);
    }
  }
  throw ParameterError("run_replicate: unknown experiment kind");
}

bounds::BoundReport make_bound_report(const ExperimentSpec& spec, std::int64_t rank,
                                      std::uint64_t signal_key) {
  bounds::BoundReport report{};
  report.kappa = spec.kappa;
  switch (spec.kind) {
    case ExperimentKind::kTensor: {
      const Dims3 dims{spec.dim1, spec.dim1, spec.dim1};
      const Dims3 ranks{rank, rank, rank};
      const synth::TensorSignalSpec sig{spec.dim1, spec.dim2, spec.beta, spec.lambda, signal_key};
      const Tensor3 truth = synth::gen_tensor_signal(sig);
      report.dims = dims;
      report.ranks = ranks;
      report.variance_term = bounds::thm1_variance_term(spec.kappa, dims, ranks);
      report.bias = estimators::tucker_bias_bracket(truth, TargetRanks::cubic(rank));
      std::array<Vector, 3> sigma;
      for (int mode = 1; mode <= 3; ++mode) {
        sigma[static_cast<std::size_t>(mode - 1)] =
            linalg::singular_values(tensor::matricize(truth, mode));
      }
      report.snr_margin =
          bounds::snr_condition(sigma, TargetRanks::cubic(rank), dims, spec.kappa, 1.0)
              .min_margin();
      break;
    }
    case ExperimentKind::kMatrix: {
      const synth::MatrixSignalSpec sig{spec.dim1, spec.dim2, spec.beta, spec.lambda, signal_key};
      report.dims = {spec.dim1, spec.dim2, 1};
      report.ranks = {rank, rank, 1};
      report.variance_term = bounds::corollary_rate(
          bounds::RateKind::kIidSubgaussian,
          {spec.kappa, rank, spec.dim1, spec.dim2, 0});
      report.bias = estimators::matrix_bias(synth::matrix_signal_spectrum(sig), rank);
      report.snr_margin = std::nan("");
      break;
    }
    case ExperimentKind::kCovariance: {
      const auto population = covariance_population(spec, signal_key);
      report.dims = {spec.dim1, spec.dim2, 1};
      report.ranks = {rank, rank, 1};
      const double kappa_eff = std::sqrt(population.eigenvalues(0));
      report.variance_term = bounds::corollary_rate(
          bounds::RateKind::kCovariance, {kappa_eff, rank, 0, spec.dim1, spec.dim2});
      report.bias = estimators::matrix_bias(population.eigenvalues, rank);
      report.snr_margin = std::nan("");
      break;
    }
  }
  return report;
}

SummaryRow run_row(const ExperimentSpec& spec, std::int64_t rank, int row_id,
                   const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> errors(static_cast<std::size_t>(spec.replicates));
  parallel_for(spec.replicates, options.parallelism, [&](int rep) {
    const std::uint64_t signal_key = rng::stream_key(spec.seed, "signal", row_id, rep);
    const std::uint64_t noise_key = rng::stream_key(spec.seed, "noise", row_id, rep);
    try {
      errors[static_cast<std::size_t>(rep)] = run_replicate(spec, rank, signal_key, noise_key);
    } catch (const std::exception& e) {
      throw std::runtime_error("replicate " + std::to_string(rep) + " of row " +
                               std::to_string(row_id) + " failed: " + e.what());
    }
  });

  // Deterministic fold in replicate order.
  double mean = 0.0;
  for (double e : errors) mean += e;
  mean /= spec.replicates;
  double se = 0.0;
  if (spec.replicates > 1) {
    double ss = 0.0;
    for (double e : errors) ss += (e - mean) * (e - mean);
    se = std::sqrt(ss / (spec.replicates - 1)) / std::sqrt(static_cast<double>(spec.replicates));
  }

  SummaryRow row{};
  row.kind = spec.kind;
  row.lambda = spec.lambda;
  row.dim1 = spec.dim1;
  row.dim2 = spec.dim2;
  row.rank = rank;
  row.n_replicates = spec.replicates;
  row.mean_relerr = mean;
  row.se_relerr = se;
  row.seed = spec.seed;
  row.replicate_errors = std::move(errors);
  if (options.with_bounds) {
    row.bounds = make_bound_report(spec, rank, rng::stream_key(spec.seed, "signal", row_id, 0));
  }
  row.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

double rel_err(const Matrix& estimate, const Matrix& truth) {
  if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols()) {
    throw ParameterError("rel_err: shape mismatch");
  }
  const double denom = truth.norm();
  if (!(denom > 0.0)) throw ParameterError("rel_err: zero-norm truth");
  return (estimate - truth).norm() / denom;
}

double rel_err(const Tensor3& estimate, const Tensor3& truth) {
  if (estimate.dims() != truth.dims()) throw ParameterError("rel_err: dims mismatch");
  const double denom = truth.frobenius_norm();
  if (!(denom > 0.0)) throw ParameterError("rel_err: zero-norm truth");
  return (estimate - truth).frobenius_norm() / denom;
}

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kMatrix: return "matrix";
    case ExperimentKind::kTensor: return "tensor";
    case ExperimentKind::kCovariance: return "covariance";
  }
  return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string& s) {
  if (s == "matrix") return ExperimentKind::kMatrix;
  if (s == "tensor") return ExperimentKind::kTensor;
  if (s == "covariance") return ExperimentKind::kCovariance;
  throw ParameterError("unknown experiment kind: " + s);
}

void to_json(nlohmann::json& j, const ExperimentSpec& spec) {
  j = {{"kind", to_string(spec.kind)}, {"dims", {spec.dim1, spec.dim2}},
       {"lambda", spec.lambda},        {"ranks", spec.ranks},
       {"replicates", spec.replicates}, {"seed", spec.seed},
       {"beta", spec.beta},            {"kappa", spec.kappa}};
}

void from_json(const nlohmann::json& j, ExperimentSpec& spec) {
  spec.kind = experiment_kind_from_string(j.at("kind").get<std::string>());
  const auto& dims = j.at("dims");
  spec.dim1 = dims.at(0).get<std::int64_t>();
  spec.dim2 = dims.at(1).get<std::int64_t>();
  spec.lambda = j.at("lambda").get<double>();
  spec.ranks = j.at("ranks").get<std::vector<std::int64_t>>();
  spec.replicates = j.value("replicates", 50);
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.beta = j.value("beta", 0.8);
  spec.kappa = j.value("kappa", 1.0);
}

std::vector<SummaryRow> run_grid(const std::vector<ExperimentSpec>& specs,
                                 const RunOptions& options) {
  for (const auto& spec : specs) {
    validate_spec(spec);
    guard_spec(spec, options.entry_budget);
  }
  std::vector<SummaryRow> rows;
  int row_id = 0;
  for (const auto& spec : specs) {
    for (std::int64_t rank : spec.ranks) {
      rows.push_back(run_row(spec, rank, row_id, options));
      ++row_id;
    }
  }
  return rows;
}

double TolerancePolicy::tolerance(double paper_mean, double paper_se) const {
  return std::max({se_multiplier * paper_se, abs_floor, rel_fraction * paper_mean});
}

void to_json(nlohmann::json& j, const TolerancePolicy& policy) {
  j = {{"se_multiplier", policy.se_multiplier},
       {"abs_floor", policy.abs_floor},
       {"rel_fraction", policy.rel_fraction}};
}

void from_json(const nlohmann::json& j, TolerancePolicy& policy) {
  policy.se_multiplier = j.value("se_multiplier", 5.0);
  policy.abs_floor = j.value("abs_floor", 0.002);
  policy.rel_fraction = j.value("rel_fraction", 0.05);
}

namespace {

struct PaperCell {
  double lambda;
  std::int64_t d1;  // p (tensor) or m (matrix)
  std::int64_t d2;  // s (tensor) or n (matrix)
  std::int64_t rank;
  double mean;
  double se;
};

// Table 2, matrix panel (m = 5p, n = s).
constexpr PaperCell kMatrixPanel[] = {
    {10, 100, 15, 10, 0.1178, 0.00125}, {10, 100, 15, 12, 0.0906, 0.00164},
    {10, 250, 25, 10, 0.1254, 0.00044}, {10, 250, 25, 15, 0.0868, 0.00077},
    {10, 375, 20, 10, 0.1279, 0.00045}, {10, 375, 20, 15, 0.0927, 0.00076},
    {10, 500, 80, 30, 0.0698, 0.00032}, {10, 500, 80, 40, 0.0795, 0.00035},
    {50, 100, 15, 10, 0.0844, 0.00007}, {50, 100, 15, 12, 0.0181, 0.00037},
    {50, 250, 25, 10, 0.1079, 0.00002}, {50, 250, 25, 15, 0.0378, 0.00009},
    {50, 375, 20, 10, 0.1068, 0.00002}, {50, 375, 20, 15, 0.0349, 0.00008},
    {50, 500, 80, 30, 0.0134, 0.00008}, {50, 500, 80, 40, 0.0156, 0.00006},
};

// Table 2, tensor panel.
constexpr PaperCell kTensorPanel[] = {
    {10, 20, 15, 10, 0.1092, 0.00031},  {10, 20, 15, 12, 0.0776, 0.00058},
    {10, 50, 25, 10, 0.1081, 0.00002},  {10, 50, 25, 15, 0.0402, 0.00012},
    {10, 75, 20, 10, 0.1081, 0.00002},  {10, 75, 20, 15, 0.0353, 0.00004},
    {10, 100, 80, 30, 0.0204, 0.00007}, {10, 100, 80, 40, 0.0294, 0.00007},
    {50, 20, 15, 10, 0.1018, 0.00001},  {50, 20, 15, 12, 0.0599, 0.00002},
    {50, 50, 25, 10, 0.1073, 0.00000},  {50, 50, 25, 15, 0.0352, 0.00000},
    {50, 75, 20, 10, 0.1067, 0.00000},  {50, 75, 20, 15, 0.0333, 0.00000},
    {50, 100, 80, 30, 0.0039, 0.00001}, {50, 100, 80, 40, 0.0058, 0.00001},
};

std::vector<ComparisonRow> compare_panel(ExperimentKind kind, const PaperCell* cells,
                                         std::size_t n_cells, const TolerancePolicy& policy,
                                         const RunOptions& options, std::uint64_t base_seed) {
  std::vector<ExperimentSpec> specs;
  std::vector<PaperCell> flat(cells, cells + n_cells);
  // One spec per (lambda, dims) pair, two ranks each; run_grid flattens in
  // the same order as the table.
  for (std::size_t i = 0; i < n_cells; i += 2) {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.dim1 = cells[i].d1;
    spec.dim2 = cells[i].d2;
    spec.lambda = cells[i].lambda;
    spec.ranks = {cells[i].rank, cells[i + 1].rank};
    spec.replicates = 50;
    spec.seed = rng::derive(base_seed, to_string(kind));
    specs.push_back(spec);
  }
  const std::vector<SummaryRow> rows = run_grid(specs, options);
  std::vector<ComparisonRow> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ComparisonRow c{};
    c.row = rows[i];
    c.paper_mean = flat[i].mean;
    c.paper_se = flat[i].se;
    c.abs_diff = std::abs(rows[i].mean_relerr - flat[i].mean);
    c.pass = c.abs_diff <= policy.tolerance(flat[i].mean, flat[i].se);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Table2Result reproduce_table2(Table2Panel panel, const TolerancePolicy& policy,
                              const RunOptions& options, std::uint64_t base_seed) {
  Table2Result result;
  if (panel == Table2Panel::kMatrix || panel == Table2Panel::kBoth) {
    auto rows = compare_panel(ExperimentKind::kMatrix, kMatrixPanel, std::size(kMatrixPanel),
                              policy, options, base_seed);
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  if (panel == Table2Panel::kTensor || panel == Table2Panel::kBoth) {
    auto rows = compare_panel(ExperimentKind::kTensor, kTensorPanel, std::size(kTensorPanel),
                              policy, options, base_seed);
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  result.n_pass = static_cast<int>(
      std::count_if(result.rows.begin(), result.rows.end(), [](const auto& r) { return r.pass; }));
  result.all_pass = result.n_pass == static_cast<int>(result.rows.size());
  bool all_high = true;
  bool all_low = true;
  for (const auto& r : result.rows) {
    const double diff = r.row.mean_relerr - r.paper_mean;
    all_high = all_high && diff > 0;
    all_low = all_low && diff < 0;
  }
  result.systematic_deviation = !result.rows.empty() && (all_high || all_low);
  return result;
}

int lambda_monotonicity_violations(const std::vector<ComparisonRow>& rows) {
  int violations = 0;
  for (const auto& low : rows) {
    if (low.row.lambda != 10.0) continue;
    for (const auto& high : rows) {
      if (high.row.lambda == 50.0 && high.row.kind == low.row.kind &&
          high.row.dim1 == low.row.dim1 && high.row.dim2 == low.row.dim2 &&
          high.row.rank == low.row.rank) {
        if (!(high.row.mean_relerr < low.row.mean_relerr)) ++violations;
      }
    }
  }
  return violations;
}

std::vector<SweepRow> bias_variance_sweep(const ExperimentSpec& spec, const RunOptions& options) {
  validate_spec(spec);
  guard_spec(spec, options.entry_budget);
  RunOptions with_bounds = options;
  with_bounds.with_bounds = true;
  const std::vector<SummaryRow> rows = run_grid({spec}, with_bounds);
  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.push_back({row.rank, row.mean_relerr, row.bounds->variance_term, row.bounds->bias.lower,
                   row.bounds->bias.upper});
  }
  return out;
}

void to_json(nlohmann::json& j, const DenoiseReport& report) {
  j = {{"dims", {report.dims[0], report.dims[1], report.dims[2]}},
       {"ranks", {report.ranks[0], report.ranks[1], report.ranks[2]}},
       {"input_bias_lower", report.input_bias.lower},
       {"input_bias_upper", report.input_bias.upper},
       {"wall_time_s", report.wall_time_seconds},
       {"input", report.input_path},
       {"output", report.output_path}};
}

DenoiseReport denoise_file(const std::string& input_path, estimators::TargetRanks ranks,
                           const std::string& output_path) {
  const auto start = std::chrono::steady_clock::now();
  const Tensor3 input = tensor::read_dt3(input_path);
  const auto result = estimators::one_step_hosvd(input, ranks);
  tensor::write_dt3(output_path, result.estimate);
  DenoiseReport report{};
  report.dims = input.dims();
  report.ranks = ranks.as_dims();
  report.input_bias = estimators::tucker_bias_bracket(input, ranks);
  report.input_path = input_path;
  report.output_path = output_path;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  tensor::SidecarMetadata meta;
  meta.dims = input.dims();
  meta.description = "one-step HOSVD estimate at ranks (" + std::to_string(ranks.r1) + "," +
                     std::to_string(ranks.r2) + "," + std::to_string(ranks.r3) + ") of " +
                     input_path;
  tensor::write_sidecar(output_path, meta);
  return report;
}

namespace {

void write_row_fields(std::ostream& out, const SummaryRow& row) {
  out << to_string(row.kind) << ',' << fmt_g6(row.lambda) << ',' << row.dim1 << ',' << row.dim2
      << ',' << row.rank << ',' << row.n_replicates << ',' << fmt_g6(row.mean_relerr) << ','
      << fmt_g6(row.se_relerr) << ',' << row.seed << ',' << fmt_g6(row.wall_time_seconds);
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SummaryRow>& rows, bool with_bounds) {
  out << "kind,lambda,dim1,dim2,rank,replicates,mean_relerr,se_relerr,seed,wall_time_s";
  if (with_bounds) out << ",variance_term,bias_lower,bias_upper,snr_margin";
  out << '\n';
  for (const auto& row : rows) {
    write_row_fields(out, row);
    if (with_bounds) {
      if (row.bounds) {
        out << ',' << fmt_g6(row.bounds->variance_term) << ',' << fmt_g6(row.bounds->bias.lower)
            << ',' << fmt_g6(row.bounds->bias.upper) << ','
            << (std::isnan(row.bounds->snr_margin) ? std::string("nan")
                                                   : fmt_g6(row.bounds->snr_margin));
      } else {
        out << ",,,,";
      }
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SummaryRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j = {{"kind", to_string(row.kind)},
                        {"lambda", row.lambda},
                        {"dim1", row.dim1},
                        {"dim2", row.dim2},
                        {"rank", row.rank},
                        {"replicates", row.n_replicates},
                        {"mean_relerr", row.mean_relerr},
                        {"se_relerr", row.se_relerr},
                        {"seed", row.seed},
                        {"wall_time_s", row.wall_time_seconds}};
    if (row.bounds) j["bounds"] = *row.bounds;
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "rank,mean_relerr,variance_term,bias_lower,bias_upper\n";
  for (const auto& row : rows) {
    out << row.rank << ',' << fmt_g6(row.mean_relerr) << ',' << fmt_g6(row.variance_term) << ','
        << fmt_g6(row.bias_lower) << ',' << fmt_g6(row.bias_upper) << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "kind,lambda,dim1,dim2,rank,replicates,mean_relerr,se_relerr,seed,wall_time_s,"
         "paper_mean,paper_se,abs_diff,pass\n";
  for (const auto& row : rows) {
    write_row_fields(out, row.row);
    out << ',' << fmt_g6(row.paper_mean) << ',' << fmt_g6(row.paper_se) << ','
        << fmt_g6(row.abs_diff) << ',' << (row.pass ? "true" : "false") << '\n';
  }
}

void write_comparison_json(std::ostream& out, const Table2Result& result) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : result.rows) {
    arr.push_back({{"kind", to_string(row.row.kind)},
                   {"lambda", row.row.lambda},
                   {"dim1", row.row.dim1},
                   {"dim2", row.row.dim2},
                   {"rank", row.row.rank},
                   {"mean_relerr", row.row.mean_relerr},
                   {"se_relerr", row.row.se_relerr},
                   {"paper_mean", row.paper_mean},
                   {"paper_se", row.paper_se},
                   {"abs_diff", row.abs_diff},
                   {"pass", row.pass}});
  }
  nlohmann::json j = {{"cells", std::move(arr)},
                      {"n_pass", result.n_pass},
                      {"n_cells", result.rows.size()},
                      {"all_pass", result.all_pass},
                      {"systematic_deviation", result.systematic_deviation}};
  out << j.dump(2) << '\n';
}

}  // namespace lrd::bench
